//! Right coneigenvalues and coneigenvectors: `A x̃ = x λ` with `x ≠ 0`.
//!
//! Complex coneigenvalue candidates are the eigenvalues of `φ_A`.
//! Coneigenvectors for a candidate `λ` come from the real null space of
//! `φ_A - ρ(λ)`. When that null space is empty the candidate is not a
//! coneigenvalue and [`Error::EmptyNullSpace`] is returned.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::dense::{ComplexMatrix, SqMatrix};
use crate::error::{Error, Result};
use crate::numkernel::{eigenvalues, solve_general, Spectrum};
use crate::realrep::{phi, rho, unstack};
use crate::scalar::SplitQuaternion;

#[derive(Clone, Debug, PartialEq)]
pub struct Coneigenpair {
    pub lambda: SplitQuaternion,
    pub x: SqMatrix,
    /// `‖A x̃ - x λ‖_F`.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConeigOptions {
    /// Relative pivot threshold for the null-space elimination.
    pub rank_tol: f64,
    /// Each returned vector must satisfy `residual <= verify_tol (1 + ‖A‖_F)`.
    pub verify_tol: f64,
}

impl Default for ConeigOptions {
    fn default() -> Self {
        Self {
            rank_tol: 1e-8,
            verify_tol: 1e-7,
        }
    }
}

fn require_square(a: &SqMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

fn require_column(a: &SqMatrix, x: &SqMatrix) -> Result<()> {
    if x.cols() != 1 || x.rows() != a.cols() {
        return Err(Error::ShapeMismatch {
            op: "coneigenvector",
            left: a.shape(),
            right: x.shape(),
        });
    }
    Ok(())
}

/// `σ(φ_A)` as a multiset.
pub fn coneigenvalues(a: &SqMatrix) -> Result<Spectrum> {
    require_square(a)?;
    eigenvalues(phi(a).matrix())
}

pub fn coneig_residual(a: &SqMatrix, x: &SqMatrix, lambda: SplitQuaternion) -> Result<f64> {
    require_column(a, x)?;
    let lhs = a.matmul(&x.j_conjugate())?;
    Ok(lhs.sub(&x.right_scale(lambda))?.frobenius_norm())
}

/// Null-space basis of `φ_A - ρ(λ)`, unstacked and scaled to unit Frobenius
/// norm. Every vector is checked against `A x̃ = x λ` before it is returned.
pub fn coneigenvectors(
    a: &SqMatrix,
    lambda: Complex64,
    opts: ConeigOptions,
) -> Result<Vec<SqMatrix>> {
    require_square(a)?;
    let n = a.rows();
    let lam = SplitQuaternion::from_complex(lambda.re, lambda.im);
    let system = phi(a).into_matrix().sub(&rho(lam, n))?;
    let outcome = solve_general(&system, &alloc::vec![0.0; 4 * n], opts.rank_tol);
    let bound = opts.verify_tol * (1.0 + a.frobenius_norm());
    let mut out = Vec::with_capacity(outcome.null_basis.len());
    for v in outcome.null_basis {
        let col = crate::dense::RealMatrix::column_vector(&v);
        let x = unstack(&col)?;
        let norm = x.frobenius_norm();
        let x = x.scale(1.0 / norm);
        if coneig_residual(a, &x, lam)? <= bound {
            out.push(x);
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyNullSpace {
            re: lambda.re,
            im: lambda.im,
        });
    }
    Ok(out)
}

/// Every verified pair for every distinct eigenvalue of `φ_A`, plus the
/// eigenvalues for which no coneigenvector exists.
pub fn coneigenpairs(
    a: &SqMatrix,
    opts: ConeigOptions,
) -> Result<(Vec<Coneigenpair>, Vec<Complex64>)> {
    let spectrum = coneigenvalues(a)?;
    let merge = 1e-9 * (1.0 + phi(a).matrix().frobenius_norm());
    let mut pairs = Vec::new();
    let mut missing = Vec::new();
    for lambda in spectrum.distinct(merge) {
        match coneigenvectors(a, lambda, opts) {
            Ok(vs) => {
                let lam = SplitQuaternion::from_complex(lambda.re, lambda.im);
                for x in vs {
                    let residual = coneig_residual(a, &x, lam)?;
                    pairs.push(Coneigenpair {
                        lambda: lam,
                        x,
                        residual,
                    });
                }
            }
            Err(Error::EmptyNullSpace { .. }) => missing.push(lambda),
            Err(e) => return Err(e),
        }
    }
    Ok((pairs, missing))
}

pub fn verify_coneigenpair(
    a: &SqMatrix,
    x: &SqMatrix,
    lambda: SplitQuaternion,
    tol: f64,
) -> Result<bool> {
    require_column(a, x)?;
    if x.max_abs() == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(coneig_residual(a, x, lambda)? <= tol)
}

/// New pair `(x β̃, (β̃)⁻¹ λ β)` from a pair `(x, λ)`.
pub fn transform_coneigenpair(
    a: &SqMatrix,
    pair: &Coneigenpair,
    beta: SplitQuaternion,
) -> Result<Coneigenpair> {
    let beta_j = beta.j_conj();
    let beta_j_inv = beta_j.inverse()?;
    let x = pair.x.right_scale(beta_j);
    let lambda = beta_j_inv * pair.lambda * beta;
    let residual = coneig_residual(a, &x, lambda)?;
    Ok(Coneigenpair {
        lambda,
        x,
        residual,
    })
}

/// Checks the two eigenvalue restatements of `A x̃ = x λ`:
/// `(A j) x = x (λ j)` and `(j A) x̃ = x̃ (j λ)`.
pub fn eigen_shift_check(
    a: &SqMatrix,
    x: &SqMatrix,
    lambda: SplitQuaternion,
    tol: f64,
) -> Result<bool> {
    require_column(a, x)?;
    let j = SplitQuaternion::J;
    let aj = a.right_scale(j);
    let first = aj
        .matmul(x)?
        .sub(&x.right_scale(lambda * j))?
        .frobenius_norm();
    let ja = a.left_scale(j);
    let xt = x.j_conjugate();
    let second = ja
        .matmul(&xt)?
        .sub(&xt.right_scale(j * lambda))?
        .frobenius_norm();
    Ok(first <= tol && second <= tol)
}

/// With `x = x1 + x2 j` and `y = (x1; conj(x2))`, checks `χ_A conj(y) = λ y`.
pub fn adjoint_coneigen_check(
    a: &SqMatrix,
    x: &SqMatrix,
    lambda: SplitQuaternion,
    tol: f64,
) -> Result<bool> {
    if !lambda.is_complex() {
        return Err(Error::NonComplexLambda);
    }
    require_column(a, x)?;
    let chi = a.complex_adjoint()?;
    let (x1, x2) = x.complex_decompose();
    let n = x.rows();
    let mut y = ComplexMatrix::zeros(2 * n, 1);
    y.set_block(0, 0, &x1);
    y.set_block(n, 0, &x2.conj());
    let lam = Complex64::new(lambda.q0, lambda.q1);
    let lhs = chi.matmul(&y.conj())?;
    let rhs = y.map(|v| lam * v);
    Ok(lhs.sub(&rhs)?.frobenius_norm() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE: SplitQuaternion = SplitQuaternion::ONE;
    const I: SplitQuaternion = SplitQuaternion::I;
    const J: SplitQuaternion = SplitQuaternion::J;
    const K: SplitQuaternion = SplitQuaternion::K;

    fn m1(q: SplitQuaternion) -> SqMatrix {
        SqMatrix::from_rows(&[[q]])
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn near(s: &Spectrum, expected: &[Complex64]) -> bool {
        s.matching_distance(&Spectrum::new(expected.to_vec())) < 1e-12
    }

    #[test]
    fn coneigenvalue_examples() {
        let pm = [c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0)];
        assert!(near(&coneigenvalues(&m1(ONE)).unwrap(), &pm));
        assert!(near(&coneigenvalues(&m1(I)).unwrap(), &pm));
        assert!(near(
            &coneigenvalues(&SqMatrix::zeros(2, 2)).unwrap(),
            &[c(0.0, 0.0); 8]
        ));
    }

    #[test]
    fn coneigenvector_examples() {
        let opts = ConeigOptions::default();
        let basis = coneigenvectors(&m1(ONE), c(-1.0, 0.0), opts).unwrap();
        assert_eq!(basis.len(), 2);
        for x in &basis {
            let q = x.get(0, 0);
            assert_eq!((q.q0, q.q2), (0.0, 0.0));
        }

        let basis = coneigenvectors(&m1(I), c(1.0, 0.0), opts).unwrap();
        // 1 + i lies in the span: projecting it onto the basis recovers it.
        let target = [1.0, 1.0, 0.0, 0.0];
        let coords: Vec<[f64; 4]> = basis.iter().map(|x| x.get(0, 0).coeffs()).collect();
        let mut residual = target;
        // Gram-Schmidt over the basis
        let mut ortho: Vec<[f64; 4]> = Vec::new();
        for v in coords {
            let mut w = v;
            for u in &ortho {
                let d: f64 = (0..4).map(|t| w[t] * u[t]).sum();
                for t in 0..4 {
                    w[t] -= d * u[t];
                }
            }
            let nrm = libm::sqrt(w.iter().map(|t| t * t).sum());
            ortho.push(w.map(|t| t / nrm));
        }
        for u in &ortho {
            let d: f64 = (0..4).map(|t| residual[t] * u[t]).sum();
            for t in 0..4 {
                residual[t] -= d * u[t];
            }
        }
        assert!(residual.iter().all(|v| v.abs() < 1e-12));

        assert_eq!(
            coneigenvectors(&m1(ONE), c(2.0, 0.0), opts),
            Err(Error::EmptyNullSpace { re: 2.0, im: 0.0 })
        );
    }

    #[test]
    fn k_has_no_complex_coneigenvalues() {
        // σ(φ_k) = {±i}, but k x̃ = x λ has no solution for complex λ
        let s = coneigenvalues(&m1(K)).unwrap();
        assert!(near(
            &s,
            &[c(0.0, 1.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, -1.0)]
        ));
        let (pairs, missing) = coneigenpairs(&m1(K), ConeigOptions::default()).unwrap();
        assert!(pairs.is_empty());
        assert_eq!(missing.len(), 2);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_coneigenpair(&m1(I), &m1(ONE + I), ONE, 1e-12).unwrap());
        assert!(verify_coneigenpair(&m1(ONE), &m1(I), -ONE, 1e-12).unwrap());
        assert!(!verify_coneigenpair(&m1(ONE), &m1(ONE), -ONE, 1e-12).unwrap());
        assert_eq!(
            verify_coneigenpair(&m1(ONE), &m1(SplitQuaternion::ZERO), ONE, 1e-12),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn transform_examples() {
        let a = m1(ONE);
        let pair = Coneigenpair {
            lambda: -ONE,
            x: m1(I),
            residual: 0.0,
        };
        let same = transform_coneigenpair(&a, &pair, ONE).unwrap();
        assert_eq!(same.lambda, -ONE);
        assert_eq!(same.x, m1(I));
        let scaled = transform_coneigenpair(&a, &pair, SplitQuaternion::from_real(3.0)).unwrap();
        assert!((scaled.lambda - pair.lambda).max_abs() < 1e-15);
        assert_eq!(scaled.x, m1(I.scale(3.0)));
        let moved =
            transform_coneigenpair(&a, &pair, SplitQuaternion::new(1.0, 0.0, 2.0, 0.0)).unwrap();
        assert!(verify_coneigenpair(&a, &moved.x, moved.lambda, 1e-9).unwrap());
        assert!(matches!(
            transform_coneigenpair(&a, &pair, ONE + J),
            Err(Error::NullDivisor { .. })
        ));
    }

    #[test]
    fn shift_and_adjoint_examples() {
        assert!(eigen_shift_check(&m1(I), &m1(ONE + I), ONE, 1e-12).unwrap());
        assert!(eigen_shift_check(&m1(ONE), &m1(I), -ONE, 1e-12).unwrap());
        assert!(adjoint_coneigen_check(&m1(I), &m1(ONE + I), ONE, 1e-12).unwrap());
        assert!(adjoint_coneigen_check(&m1(ONE), &m1(I), -ONE, 1e-12).unwrap());
        assert_eq!(
            adjoint_coneigen_check(&m1(ONE), &m1(I), J, 1e-12),
            Err(Error::NonComplexLambda)
        );

        let basis = coneigenvectors(&m1(J), c(1.0, 0.0), ConeigOptions::default()).unwrap();
        let with_j_part = basis
            .iter()
            .find(|x| x.get(0, 0).q2 != 0.0 || x.get(0, 0).q3 != 0.0);
        let x = with_j_part.expect("a coneigenvector of j with nonzero x2");
        assert!(adjoint_coneigen_check(&m1(J), x, ONE, 1e-12).unwrap());
    }

    #[test]
    fn transported_pair_passes_shift_check() {
        let a = m1(I);
        let pair = Coneigenpair {
            lambda: ONE,
            x: m1(ONE + I),
            residual: 0.0,
        };
        let moved =
            transform_coneigenpair(&a, &pair, SplitQuaternion::new(1.0, 0.5, 0.25, -0.5)).unwrap();
        assert!(!moved.lambda.is_complex());
        assert!(moved.residual < 1e-12);
        assert!(eigen_shift_check(&a, &moved.x, moved.lambda, 1e-12).unwrap());
    }
}
