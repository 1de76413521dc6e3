//! Split quaternion matrix operations.
//!
//! Ring operations (`add`, `matmul`, `transpose`) live on the generic
//! [`Matrix`]; this module adds the conjugations, the complex decomposition
//! `A = A1 + A2 j` with its adjoint `χ_A`, inversion and consimilarity.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::dense::{ComplexMatrix, Matrix, SqMatrix};
use crate::error::{Error, Result};
use crate::numkernel::lu_solve;
use crate::realrep::{phi, phi_extract, structure_matrices};
use crate::scalar::SplitQuaternion;

impl SqMatrix {
    /// `c · A` for real `c`.
    pub fn scale(&self, c: f64) -> Self {
        self.map(|q| q.scale(c))
    }

    /// Entrywise conjugate `Ā`.
    pub fn conjugate(&self) -> Self {
        self.map(SplitQuaternion::conj)
    }

    /// `A* = (Ā)ᵀ`.
    pub fn conj_transpose(&self) -> Self {
        self.conjugate().transpose()
    }

    /// `Ã = j A j`, entrywise on any shape.
    pub fn j_conjugate(&self) -> Self {
        self.map(SplitQuaternion::j_conj)
    }

    /// `A = A1 + A2 j` with `A1 = A0 + A1' i`, `A2 = A2' + A3' i`.
    pub fn complex_decompose(&self) -> (ComplexMatrix, ComplexMatrix) {
        (
            self.map(|q| Complex64::new(q.q0, q.q1)),
            self.map(|q| Complex64::new(q.q2, q.q3)),
        )
    }

    pub fn from_complex_parts(a1: &ComplexMatrix, a2: &ComplexMatrix) -> Result<Self> {
        if a1.shape() != a2.shape() {
            return Err(Error::ShapeMismatch {
                op: "from_complex_parts",
                left: a1.shape(),
                right: a2.shape(),
            });
        }
        Ok(Matrix::from_fn(a1.rows(), a1.cols(), |i, j| {
            let (u, v) = (a1.get(i, j), a2.get(i, j));
            SplitQuaternion::new(u.re, u.im, v.re, v.im)
        }))
    }

    /// `χ_A = [[A1, A2], [conj(A2), conj(A1)]]` for square `A`.
    pub fn complex_adjoint(&self) -> Result<ComplexMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(self.adjoint_blocks())
    }

    fn adjoint_blocks(&self) -> ComplexMatrix {
        let (a1, a2) = self.complex_decompose();
        let (m, n) = self.shape();
        let mut chi = ComplexMatrix::zeros(2 * m, 2 * n);
        chi.set_block(0, 0, &a1);
        chi.set_block(0, n, &a2);
        chi.set_block(m, 0, &a2.conj());
        chi.set_block(m, n, &a1.conj());
        chi
    }

    /// `(A1; A2)`, a `2m×n` complex matrix.
    pub fn complex_stack(&self) -> ComplexMatrix {
        let (a1, a2) = self.complex_decompose();
        let (m, n) = self.shape();
        let mut out = ComplexMatrix::zeros(2 * m, n);
        out.set_block(0, 0, &a1);
        out.set_block(m, 0, &a2);
        out
    }

    pub fn complex_unstack(v: &ComplexMatrix) -> Result<Self> {
        if !v.rows().is_multiple_of(2) {
            return Err(Error::ShapeMismatch {
                op: "complex_unstack",
                left: v.shape(),
                right: (2, 1),
            });
        }
        let m = v.rows() / 2;
        Self::from_complex_parts(&v.block(0, 0, m, v.cols()), &v.block(m, 0, m, v.cols()))
    }

    /// `A B` through the complex adjoint of `B`.
    ///
    /// `(A1 A2) χ_B = (C1 C2)` for `C = A B`; transposed, this is
    /// `χ_Bᵀ · stack(Aᵀ) = stack(Cᵀ)`, which is what gets evaluated.
    /// `B` may be rectangular, in which case `χ_B` is the `2n×2s` block matrix.
    pub fn mul_via_adjoint(&self, b: &SqMatrix) -> Result<SqMatrix> {
        if self.cols() != b.rows() {
            return Err(Error::ShapeMismatch {
                op: "mul_via_adjoint",
                left: self.shape(),
                right: b.shape(),
            });
        }
        let chi_t = b.adjoint_blocks().transpose();
        let stacked = chi_t.matmul(&self.transpose().complex_stack())?;
        Ok(Self::complex_unstack(&stacked)?.transpose())
    }

    /// Inverse through the real representation: `φ_{A⁻¹} = P φ_A⁻¹ P`.
    pub fn inverse(&self) -> Result<SqMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        let n = self.rows();
        let phi_a = phi(self).into_matrix();
        let phi_inv = lu_solve(&phi_a, &Matrix::identity(4 * n))?;
        let p = structure_matrices(n).p;
        let rep = p.matmul(&phi_inv)?.matmul(&p)?;
        phi_extract(&rep)
    }

    /// `P̃ A P⁻¹`.
    pub fn consim_transform(&self, p: &SqMatrix) -> Result<SqMatrix> {
        let p_inv = p.inverse()?;
        p.j_conjugate().matmul(self)?.matmul(&p_inv)
    }

    /// Whether `‖P̃ A P⁻¹ - B‖_F <= tol`. Returns the residual alongside.
    pub fn verify_consimilar(&self, b: &SqMatrix, p: &SqMatrix, tol: f64) -> Result<(bool, f64)> {
        let t = self.consim_transform(p)?;
        let residual = t.sub(b)?.frobenius_norm();
        Ok((residual <= tol, residual))
    }

    /// Column `j` as an `m×1` matrix.
    pub fn column(&self, j: usize) -> SqMatrix {
        self.block(0, j, self.rows(), 1)
    }

    pub fn coefficients(&self) -> Vec<[f64; 4]> {
        self.as_slice().iter().map(|q| q.coeffs()).collect()
    }
}
