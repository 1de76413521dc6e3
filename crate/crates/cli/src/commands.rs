//! Subcommand implementations. Each returns a report tree; a report may
//! still carry a failure that decides the exit code.

use sqmat::scalar::{canonical_witness, solve_consimilarity, sqrt};
use sqmat::spectral::{
    adjoint_coneigen_check, coneigenpairs, coneigenvalues, eigen_shift_check, ConeigOptions,
};
use sqmat::stein::{solve, SteinOptions, SteinProblem, Uniqueness};
use sqmat::{CausalCharacter, ConsimSolutionFamily, SplitQuaternion, SqMatrix};

use crate::cli::{Cli, Command, ScalarOp};
use crate::error::{CliError, CliResult};
use crate::input::{read_matrix, read_problem};
use crate::report::{Node, Obj};

pub struct Outcome {
    pub report: Node,
    /// Printed after the report; its exit code replaces 0.
    pub failure: Option<CliError>,
}

impl From<Node> for Outcome {
    fn from(report: Node) -> Self {
        Self {
            report,
            failure: None,
        }
    }
}

/// Tolerance overrides, validated positive.
#[derive(Clone, Copy, Debug, Default)]
pub struct Tolerances {
    pub residual: Option<f64>,
    pub rank: Option<f64>,
    pub null: Option<f64>,
}

impl Tolerances {
    pub fn from_cli(cli: &Cli) -> CliResult<Self> {
        let check = |name: &str, v: Option<f64>| match v {
            Some(t) if !(t > 0.0 && t.is_finite()) => Err(CliError::Parse(format!(
                "--{name} must be a positive number, got {t}"
            ))),
            _ => Ok(v),
        };
        Ok(Self {
            residual: check("tol-residual", cli.tol_residual)?,
            rank: check("tol-rank", cli.tol_rank)?,
            null: check("null-tol", cli.null_tol)?,
        })
    }
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let tol = Tolerances::from_cli(cli)?;
    match &cli.command {
        Command::Solve { problem } => {
            let (a, b, c) = read_problem(problem)?;
            cmd_solve(a, b, c, tol)
        }
        Command::Coneig { matrix } => cmd_coneig(&read_matrix(matrix)?, tol).map(Into::into),
        Command::Inverse { matrix } => cmd_inverse(&read_matrix(matrix)?).map(Into::into),
        Command::Classify { matrix } => Ok(cmd_classify(&read_matrix(matrix)?, tol).into()),
        Command::ConsimCheck { a, b, p } => {
            cmd_consim_check(&read_matrix(a)?, &read_matrix(b)?, &read_matrix(p)?, tol)
                .map(Into::into)
        }
        Command::Scalar { op, coeffs } => cmd_scalar(*op, coeffs, tol).map(Into::into),
    }
}

pub fn cmd_solve(a: SqMatrix, b: SqMatrix, c: SqMatrix, tol: Tolerances) -> CliResult<Outcome> {
    let prob = SteinProblem::new(a, b, c)?;
    let defaults = SteinOptions::default();
    let opts = SteinOptions {
        rank_tol: tol.rank.unwrap_or(defaults.rank_tol),
        residual_tol: tol.residual.unwrap_or(defaults.residual_tol),
    };
    let sol = solve(&prob, opts)?;
    let report = Obj::new()
        .with("X", sol.x)
        .with("uniqueness", sol.uniqueness.as_str())
        .with("residual", sol.residual)
        .with("nullity", sol.nullity)
        .build();
    let failure = (sol.uniqueness == Uniqueness::NoSolution).then(|| {
        CliError::NoSolution(
            "inconsistent real system (I - phi_B^T (x) phi_A) vec(Y) = vec(phi_C)".into(),
        )
    });
    Ok(Outcome { report, failure })
}

pub fn cmd_coneig(a: &SqMatrix, tol: Tolerances) -> CliResult<Node> {
    let defaults = ConeigOptions::default();
    let opts = ConeigOptions {
        rank_tol: tol.rank.unwrap_or(defaults.rank_tol),
        verify_tol: tol.residual.unwrap_or(defaults.verify_tol),
    };
    let spectrum = coneigenvalues(a)?;
    let (pairs, missing) = coneigenpairs(a, opts)?;
    let check_tol = 1e-8 * (1.0 + a.frobenius_norm());
    let mut pair_nodes = Vec::with_capacity(pairs.len());
    for pair in pairs {
        let shift = eigen_shift_check(a, &pair.x, pair.lambda, check_tol)?;
        let adjoint = adjoint_coneigen_check(a, &pair.x, pair.lambda, check_tol)?;
        let lambda = sqmat::Complex64::new(pair.lambda.q0, pair.lambda.q1);
        pair_nodes.push(
            Obj::new()
                .with("lambda", lambda)
                .with("x", pair.x)
                .with("residual", pair.residual)
                .with("shift_check", shift)
                .with("adjoint_check", adjoint)
                .build(),
        );
    }
    Ok(Obj::new()
        .with("eigenvalues", spectrum.values().to_vec())
        .with("pairs", Node::List(pair_nodes))
        .with("missing", missing)
        .build())
}

pub fn cmd_inverse(a: &SqMatrix) -> CliResult<Node> {
    let inv = a.inverse()?;
    let residual = a
        .matmul(&inv)?
        .sub(&SqMatrix::identity(a.rows()))?
        .frobenius_norm();
    Ok(Obj::new()
        .with("inverse", inv)
        .with("residual", residual)
        .build())
}

fn classify(q: SplitQuaternion, tol: Tolerances) -> CausalCharacter {
    match tol.null {
        Some(t) => q.classify_with_tol(t),
        None => q.classify(),
    }
}

pub fn cmd_classify(a: &SqMatrix, tol: Tolerances) -> Node {
    let classes: Vec<Node> = (0..a.rows())
        .map(|i| {
            Node::List(
                (0..a.cols())
                    .map(|j| classify(a.get(i, j), tol).as_str().into())
                    .collect(),
            )
        })
        .collect();
    let forms: Vec<Vec<f64>> = (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| a.get(i, j).quadratic_form())
                .collect()
        })
        .collect();
    Obj::new()
        .with("rows", a.rows())
        .with("cols", a.cols())
        .with("quadratic_forms", Node::Rows(forms))
        .with("classes", Node::List(classes))
        .build()
}

pub fn cmd_consim_check(
    a: &SqMatrix,
    b: &SqMatrix,
    p: &SqMatrix,
    tol: Tolerances,
) -> CliResult<Node> {
    let tolerance = tol.residual.unwrap_or(1e-9) * (1.0 + b.frobenius_norm());
    let (ok, residual) = a.verify_consimilar(b, p, tolerance)?;
    Ok(Obj::new()
        .with("consimilar", ok)
        .with("residual", residual)
        .with("tolerance", tolerance)
        .build())
}

fn rows(m: [[f64; 4]; 4]) -> Node {
    Node::Rows(m.iter().map(|r| r.to_vec()).collect())
}

pub fn cmd_scalar(op: ScalarOp, coeffs: &[f64], tol: Tolerances) -> CliResult<Node> {
    let need = 4 * op.arity();
    if coeffs.len() != need {
        return Err(CliError::Parse(format!(
            "expected {need} coefficients, got {}",
            coeffs.len()
        )));
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(CliError::Parse("coefficients must be finite".into()));
    }
    let q = |k: usize| {
        SplitQuaternion::new(
            coeffs[4 * k],
            coeffs[4 * k + 1],
            coeffs[4 * k + 2],
            coeffs[4 * k + 3],
        )
    };
    let a = q(0);
    let report = match op {
        ScalarOp::Mul => {
            let b = q(1);
            Obj::new().with("a", a).with("b", b).with("product", a * b)
        }
        ScalarOp::Conj => Obj::new().with("input", a).with("result", a.conj()),
        ScalarOp::Jconj => Obj::new().with("input", a).with("result", a.j_conj()),
        ScalarOp::Norm => Obj::new()
            .with("input", a)
            .with("quadratic_form", a.quadratic_form())
            .with("norm", a.norm()),
        ScalarOp::Classify => Obj::new()
            .with("input", a)
            .with("quadratic_form", a.quadratic_form())
            .with("class", classify(a, tol).as_str()),
        ScalarOp::Inverse => {
            let inv = a.inverse()?;
            Obj::new()
                .with("input", a)
                .with("result", inv)
                .with("residual", (a * inv - SplitQuaternion::ONE).euclidean())
        }
        ScalarOp::LeftRep => Obj::new()
            .with("input", a)
            .with("matrix", rows(a.left_rep())),
        ScalarOp::RightRep => Obj::new()
            .with("input", a)
            .with("matrix", rows(a.right_rep())),
        ScalarOp::Consim => {
            let b = q(1);
            let family = solve_consimilarity(a, b)?;
            let mut obj = Obj::new().with("a", a).with("b", b);
            obj = match family {
                ConsimSolutionFamily::Slice { generator } => {
                    obj.with("family", "slice").with("generator", generator)
                }
                ConsimSolutionFamily::Hyperplane { constraint } => obj
                    .with("family", "hyperplane")
                    .with("constraint", constraint.to_vec()),
                ConsimSolutionFamily::Empty => obj.with("family", "empty"),
            };
            let witness = family.witness();
            let residual = witness.map(|x| (a * x - x.conj() * b).euclidean());
            obj.with("witness", witness).with("residual", residual)
        }
        ScalarOp::Witness => {
            let p = canonical_witness(a)?;
            let rebuilt = p.conj().scale(a.norm()) * p.inverse()?;
            Obj::new()
                .with("input", a)
                .with("witness", p)
                .with("residual", (rebuilt - a).euclidean())
        }
        ScalarOp::Sqrt => {
            let roots = sqrt(a)?;
            Obj::new()
                .with("input", a)
                .with("roots", roots.to_vec())
                .with("residual", (roots[0] * roots[0] - a).euclidean())
        }
    };
    Ok(report.build())
}
