//! Command-line grammar.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sqmat", version, about = "Split quaternion matrix toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, env = "SQMAT_FORMAT", default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Residual tolerance (relative; see each subcommand for its default).
    #[arg(long, global = true)]
    pub tol_residual: Option<f64>,

    /// Relative pivot threshold for rank decisions.
    #[arg(long, global = true)]
    pub tol_rank: Option<f64>,

    /// Treat |I_q| <= this as null when classifying.
    #[arg(long, global = true)]
    pub null_tol: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve X - A X~ B = C for a problem file {"A", "B", "C"}.
    Solve { problem: PathBuf },
    /// Complex coneigenvalues and coneigenvectors of a square matrix.
    Coneig { matrix: PathBuf },
    /// Inverse of a square matrix.
    Inverse { matrix: PathBuf },
    /// Causal character of every entry.
    Classify { matrix: PathBuf },
    /// Check B = P~ A P^-1.
    ConsimCheck { a: PathBuf, b: PathBuf, p: PathBuf },
    /// Operations on scalars given as coefficients q0 q1 q2 q3.
    Scalar {
        op: ScalarOp,
        #[arg(allow_negative_numbers = true, required = true)]
        coeffs: Vec<f64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScalarOp {
    /// Product a b (8 coefficients).
    Mul,
    /// Conjugate.
    Conj,
    /// j-conjugate j q j.
    Jconj,
    /// Quadratic form and norm.
    Norm,
    /// Timelike, spacelike or null.
    Classify,
    Inverse,
    /// 4x4 matrix of x -> q x.
    LeftRep,
    /// 4x4 matrix of x -> x q.
    RightRep,
    /// Solutions of a x = conj(x) b (8 coefficients).
    Consim,
    /// p with a = conj(p) |a| p^-1.
    Witness,
    /// Square roots.
    Sqrt,
}

impl ScalarOp {
    pub fn arity(self) -> usize {
        match self {
            ScalarOp::Mul | ScalarOp::Consim => 2,
            _ => 1,
        }
    }
}
