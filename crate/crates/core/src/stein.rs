//! Solver for `X - A X̃ B = C` with `A` m×m, `B` n×n and `C` m×n.
//!
//! The quaternionic equation is solvable exactly when the real equation
//! `Y - φ_A Y φ_B = φ_C` is. That equation is solved by linearizing with
//! `(I - φ_Bᵀ ⊗ φ_A) vec(Y) = vec(φ_C)`. Any real solution `Y` is then
//! averaged over the symmetries `Y ↦ -Q⁻¹YQ`, `Y ↦ R⁻¹YR`, `Y ↦ -S⁻¹YS`. Each
//! of them maps solutions to solutions, and the average `Y'` has exact φ
//! structure. Its components are read off as `X`.

use crate::dense::{RealMatrix, SqMatrix};
use crate::error::{Error, Result};
use crate::numkernel::{kron, solve_general, Lu, SolveKind};
use crate::realrep::{phi, phi_extract};
use crate::scalar::SplitQuaternion;

/// Largest `m·n` accepted; the dense real system has `16·m·n` unknowns.
pub const MAX_BLOCKS: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct SteinProblem {
    pub a: SqMatrix,
    pub b: SqMatrix,
    pub c: SqMatrix,
}

impl SteinProblem {
    pub fn new(a: SqMatrix, b: SqMatrix, c: SqMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if !b.is_square() {
            return Err(Error::NotSquare {
                rows: b.rows(),
                cols: b.cols(),
            });
        }
        if c.shape() != (a.rows(), b.rows()) {
            return Err(Error::ShapeMismatch {
                op: "stein",
                left: (a.rows(), b.rows()),
                right: c.shape(),
            });
        }
        Ok(Self { a, b, c })
    }

    /// `‖X - A X̃ B - C‖_F`.
    pub fn residual(&self, x: &SqMatrix) -> Result<f64> {
        let rhs = self.a.matmul(&x.j_conjugate())?.matmul(&self.b)?;
        Ok(x.sub(&rhs)?.sub(&self.c)?.frobenius_norm())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    Unique,
    NonUnique,
    NoSolution,
}

impl Uniqueness {
    pub fn as_str(self) -> &'static str {
        match self {
            Uniqueness::Unique => "unique",
            Uniqueness::NonUnique => "non-unique",
            Uniqueness::NoSolution => "no-solution",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SteinSolution {
    /// `None` exactly when `uniqueness` is `NoSolution`.
    pub x: Option<SqMatrix>,
    pub uniqueness: Uniqueness,
    /// `‖X - A X̃ B - C‖_F`, absent without a solution.
    pub residual: Option<f64>,
    /// Null-space dimension of the real Kronecker system.
    pub nullity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SteinOptions {
    /// Relative pivot threshold on `I - φ_Bᵀ ⊗ φ_A`.
    pub rank_tol: f64,
    /// Required `‖X - A X̃ B - C‖_F <= residual_tol (1 + ‖C‖_F)`.
    pub residual_tol: f64,
}

impl Default for SteinOptions {
    fn default() -> Self {
        Self {
            rank_tol: 1e-10,
            residual_tol: 1e-8,
        }
    }
}

/// `(φ_A, φ_B, φ_C)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealEquation {
    pub m: RealMatrix,
    pub n: RealMatrix,
    pub k: RealMatrix,
}

pub fn build_real_equation(prob: &SteinProblem) -> Result<RealEquation> {
    let size = prob.a.rows() * prob.b.rows();
    if size > MAX_BLOCKS {
        return Err(Error::TooLarge {
            size,
            limit: MAX_BLOCKS,
        });
    }
    Ok(RealEquation {
        m: phi(&prob.a).into_matrix(),
        n: phi(&prob.b).into_matrix(),
        k: phi(&prob.c).into_matrix(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealSteinKind {
    Unique,
    NonUnique { nullity: usize },
    Inconsistent,
}

/// Solves `Y - M Y N = K`. Non-unique systems yield the particular
/// solution with all free variables set to zero.
pub fn solve_real_stein(
    m: &RealMatrix,
    n: &RealMatrix,
    k: &RealMatrix,
    rank_tol: f64,
) -> Result<(Option<RealMatrix>, RealSteinKind)> {
    if !m.is_square() || !n.is_square() || k.shape() != (m.rows(), n.rows()) {
        return Err(Error::ShapeMismatch {
            op: "solve_real_stein",
            left: (m.rows(), n.rows()),
            right: k.shape(),
        });
    }
    let (p, q) = k.shape();
    let size = p * q;
    let system = RealMatrix::identity(size).sub(&kron(&n.transpose(), m))?;
    let rhs = k.vec();
    if let Ok(lu) = Lu::factor_with_tol(&system, rank_tol) {
        let sol = lu.solve(&RealMatrix::column_vector(&rhs))?;
        let y = RealMatrix::from_vec_col_major(p, q, sol.as_slice())?;
        return Ok((Some(y), RealSteinKind::Unique));
    }
    let outcome = solve_general(&system, &rhs, rank_tol);
    match (outcome.kind, outcome.particular) {
        (SolveKind::Inconsistent, _) | (_, None) => Ok((None, RealSteinKind::Inconsistent)),
        (kind, Some(v)) => {
            let y = RealMatrix::from_vec_col_major(p, q, &v)?;
            let kind = match kind {
                SolveKind::Unique => RealSteinKind::Unique,
                _ => RealSteinKind::NonUnique {
                    nullity: outcome.null_basis.len(),
                },
            };
            Ok((Some(y), kind))
        }
    }
}

/// `Y' = ¼(Y - Q⁻¹YQ + R⁻¹YR - S⁻¹YS)`, evaluated blockwise:
///
/// ```text
/// Y'0 = ¼( Y11 - Y22 + Y33 - Y44)    Y'1 = ¼( Y12 + Y21 + Y34 + Y43)
/// Y'2 = ¼( Y13 + Y24 + Y31 + Y42)    Y'3 = ¼(-Y14 + Y23 - Y32 + Y41)
/// ```
///
/// The result is `φ` of `Y'0 + Y'1 i + Y'2 j + Y'3 k`.
pub fn project_solution(y: &RealMatrix) -> Result<RealMatrix> {
    Ok(phi(&project_components(y)?).into_matrix())
}

fn project_components(y: &RealMatrix) -> Result<SqMatrix> {
    let (rows, cols) = y.shape();
    if rows % 4 != 0 || cols % 4 != 0 {
        return Err(Error::ShapeMismatch {
            op: "project_solution",
            left: (rows, cols),
            right: (4, 4),
        });
    }
    let (m, n) = (rows / 4, cols / 4);
    // 1-based block indices as in the formulas above
    let blk = |u: usize, v: usize, i: usize, j: usize| y.get((u - 1) * m + i, (v - 1) * n + j);
    Ok(SqMatrix::from_fn(m, n, |i, j| {
        let b = |u, v| blk(u, v, i, j);
        SplitQuaternion::new(
            0.25 * (b(1, 1) - b(2, 2) + b(3, 3) - b(4, 4)),
            0.25 * (b(1, 2) + b(2, 1) + b(3, 4) + b(4, 3)),
            0.25 * (b(1, 3) + b(2, 4) + b(3, 1) + b(4, 2)),
            0.25 * (-b(1, 4) + b(2, 3) - b(3, 2) + b(4, 1)),
        )
    }))
}

/// `X = Y'0 + Y'1 i + Y'2 j + Y'3 k` from a projected `Y'`.
pub fn extract_solution(yp: &RealMatrix) -> Result<SqMatrix> {
    phi_extract(yp)
}

pub fn solve(prob: &SteinProblem, opts: SteinOptions) -> Result<SteinSolution> {
    let eq = build_real_equation(prob)?;
    let (y, kind) = solve_real_stein(&eq.m, &eq.n, &eq.k, opts.rank_tol)?;
    let (y, uniqueness, nullity) = match (y, kind) {
        (Some(y), RealSteinKind::Unique) => (y, Uniqueness::Unique, 0),
        (Some(y), RealSteinKind::NonUnique { nullity }) => (y, Uniqueness::NonUnique, nullity),
        _ => {
            return Ok(SteinSolution {
                x: None,
                uniqueness: Uniqueness::NoSolution,
                residual: None,
                nullity: 0,
            })
        }
    };
    let x = extract_solution(&project_solution(&y)?)?;
    let residual = prob.residual(&x)?;
    let tolerance = opts.residual_tol * (1.0 + prob.c.frobenius_norm());
    if !(residual <= tolerance) {
        return Err(Error::InternalResidualFailure {
            residual,
            tolerance,
        });
    }
    Ok(SteinSolution {
        x: Some(x),
        uniqueness,
        residual: Some(residual),
        nullity,
    })
}
