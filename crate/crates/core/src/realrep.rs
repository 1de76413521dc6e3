//! Real representation of split quaternion matrices.
//!
//! For `A = A0 + A1 i + A2 j + A3 k` (real `m×n` parts), `φ_A` is the
//! `4m×4n` matrix of `X ↦ A X̃` in stacked coordinates `(X0; X1; X2; X3)`:
//!
//! ```text
//!        ⎡ A0   A1   A2  -A3 ⎤
//! φ_A =  ⎢ A1  -A0   A3   A2 ⎥
//!        ⎢ A2  -A3   A0   A1 ⎥
//!        ⎣ A3   A2   A1  -A0 ⎦
//! ```
//!
//! Right multiplication by a scalar `q` in stacked coordinates is
//! `ρ(q, m) = right_rep(q) ⊗ I_m`: applying the 4×4 right representation to
//! every entry's coefficient column is the same as applying its blocks to the
//! four stacked component matrices. With `ρ`, the coneigen equation
//! `A x̃ = x λ` becomes the real null-space problem `(φ_A - ρ(λ)) stack(x) = 0`.
//!
//! The structure matrices are signed block permutations. In stacked
//! coordinates `P` is `X ↦ X̃`, and `Q`, `R`, `S` are right multiplication by
//! `i`, `-j`, `k`.

use crate::dense::{Matrix, RealMatrix, SqMatrix};
use crate::error::{Error, Result};
use crate::numkernel::kron;
use crate::scalar::SplitQuaternion;

/// `(component, sign)` of each block of `φ_A`.
const PHI_BLOCKS: [[(usize, f64); 4]; 4] = [
    [(0, 1.0), (1, 1.0), (2, 1.0), (3, -1.0)],
    [(1, 1.0), (0, -1.0), (3, 1.0), (2, 1.0)],
    [(2, 1.0), (3, -1.0), (0, 1.0), (1, 1.0)],
    [(3, 1.0), (2, 1.0), (1, 1.0), (0, -1.0)],
];

const P_TABLE: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
];
const Q_TABLE: [[f64; 4]; 4] = [
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0, 0.0],
];
const R_TABLE: [[f64; 4]; 4] = [
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
];
const S_TABLE: [[f64; 4]; 4] = [
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
];
const EPS2_TABLE: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

/// `φ_A` together with its block dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRep {
    m: usize,
    n: usize,
    matrix: RealMatrix,
}

impl RealRep {
    pub fn block_dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RealMatrix {
        self.matrix
    }
}

fn component(q: SplitQuaternion, s: usize) -> f64 {
    q.coeffs()[s]
}

pub fn phi(a: &SqMatrix) -> RealRep {
    let (m, n) = a.shape();
    let matrix = Matrix::from_fn(4 * m, 4 * n, |r, c| {
        let (bi, i) = (r / m, r % m);
        let (bj, j) = (c / n, c % n);
        let (s, sign) = PHI_BLOCKS[bi][bj];
        sign * component(a.get(i, j), s)
    });
    RealRep { m, n, matrix }
}

/// `(A0; A1; A2; A3)`, a `4m×n` real matrix.
pub fn stack(a: &SqMatrix) -> RealMatrix {
    let (m, n) = a.shape();
    Matrix::from_fn(4 * m, n, |r, j| component(a.get(r % m, j), r / m))
}

pub fn unstack(v: &RealMatrix) -> Result<SqMatrix> {
    let (rows, n) = v.shape();
    if rows % 4 != 0 {
        return Err(Error::ShapeMismatch {
            op: "unstack",
            left: (rows, n),
            right: (4, 1),
        });
    }
    let m = rows / 4;
    Ok(Matrix::from_fn(m, n, |i, j| {
        SplitQuaternion::new(
            v.get(i, j),
            v.get(m + i, j),
            v.get(2 * m + i, j),
            v.get(3 * m + i, j),
        )
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub struct StructureSet {
    pub p: RealMatrix,
    pub q: RealMatrix,
    pub r: RealMatrix,
    pub s: RealMatrix,
    pub eps2: RealMatrix,
}

impl StructureSet {
    pub fn q_inv(&self) -> RealMatrix {
        self.q.neg()
    }
}

fn expand(table: [[f64; 4]; 4], m: usize) -> RealMatrix {
    kron(&RealMatrix::from_array4(table), &RealMatrix::identity(m))
}

pub fn structure_matrices(m: usize) -> StructureSet {
    StructureSet {
        p: expand(P_TABLE, m),
        q: expand(Q_TABLE, m),
        r: expand(R_TABLE, m),
        s: expand(S_TABLE, m),
        eps2: expand(EPS2_TABLE, m),
    }
}

/// Right multiplication by `q` on stacked `m×1` columns.
pub fn rho(q: SplitQuaternion, m: usize) -> RealMatrix {
    expand(q.right_rep(), m)
}

/// Reads `(A0; A1; A2; A3)` from the first block column and checks that
/// rebuilding `φ` reproduces `mat`.
pub fn phi_extract(mat: &RealMatrix) -> Result<SqMatrix> {
    let (rows, cols) = mat.shape();
    if rows % 4 != 0 || cols % 4 != 0 {
        return Err(Error::ShapeMismatch {
            op: "phi_extract",
            left: (rows, cols),
            right: (4, 4),
        });
    }
    let (m, n) = (rows / 4, cols / 4);
    let a = Matrix::from_fn(m, n, |i, j| {
        SplitQuaternion::new(
            mat.get(i, j),
            mat.get(m + i, j),
            mat.get(2 * m + i, j),
            mat.get(3 * m + i, j),
        )
    });
    let deviation = phi(&a).matrix.max_abs_diff(mat)?;
    if deviation > 1e-9 * (1.0 + mat.norm_inf()) {
        return Err(Error::NotStructured { deviation });
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE: SplitQuaternion = SplitQuaternion::ONE;
    const I: SplitQuaternion = SplitQuaternion::I;
    const J: SplitQuaternion = SplitQuaternion::J;

    fn scalar(q: SplitQuaternion) -> SqMatrix {
        SqMatrix::from_rows(&[[q]])
    }

    #[test]
    fn phi_examples() {
        assert_eq!(
            phi(&scalar(ONE)).into_matrix(),
            RealMatrix::from_array4(P_TABLE)
        );
        assert_eq!(
            phi(&scalar(I)).into_matrix(),
            RealMatrix::from_rows(&[
                [0.0, 1.0, 0.0, 0.0],
                [1.0, 0.0, 0.0, 0.0],
                [0.0, 0.0, 0.0, 1.0],
                [0.0, 0.0, 1.0, 0.0],
            ])
        );
        let z = phi(&SqMatrix::zeros(2, 3));
        assert_eq!(z.block_dims(), (2, 3));
        assert_eq!(z.into_matrix(), RealMatrix::zeros(8, 12));
    }

    #[test]
    fn stack_examples() {
        assert_eq!(stack(&scalar(I)).as_slice(), &[0.0, 1.0, 0.0, 0.0]);
        let a = SqMatrix::from_rows(&[
            [SplitQuaternion::new(1.0, 2.0, 3.0, 4.0), J],
            [I, SplitQuaternion::new(-1.0, 0.5, 0.0, 2.0)],
        ]);
        assert_eq!(unstack(&stack(&a)).unwrap(), a);
        let lhs = phi(&scalar(ONE))
            .into_matrix()
            .matmul(&stack(&scalar(I)))
            .unwrap();
        assert_eq!(lhs, stack(&scalar(-I)));
        assert!(unstack(&RealMatrix::zeros(6, 1)).is_err());
    }

    #[test]
    fn structure_examples() {
        let s = structure_matrices(1);
        assert_eq!(s.p, RealMatrix::from_array4(P_TABLE));
        assert_eq!(
            s.r,
            RealMatrix::from_rows(&[
                [0.0, 0.0, -1.0, 0.0],
                [0.0, 0.0, 0.0, -1.0],
                [-1.0, 0.0, 0.0, 0.0],
                [0.0, -1.0, 0.0, 0.0],
            ])
        );
        assert_eq!(s.eps2, RealMatrix::from_array4(EPS2_TABLE));
        let s2 = structure_matrices(2);
        assert_eq!(s2.q.shape(), (8, 8));
        assert_eq!(s2.q.get(0, 2), -1.0);
        assert_eq!(s2.q.get(2, 0), 1.0);
    }

    #[test]
    fn structure_squares() {
        for m in 1..4 {
            let s = structure_matrices(m);
            let id = RealMatrix::identity(4 * m);
            assert_eq!(s.p.matmul(&s.p).unwrap(), id);
            assert_eq!(s.q.matmul(&s.q).unwrap(), id.neg());
            assert_eq!(s.r.matmul(&s.r).unwrap(), id);
            assert_eq!(s.s.matmul(&s.s).unwrap(), id);
            assert_eq!(s.eps2.matmul(&s.eps2).unwrap(), id);
            assert_eq!(s.q.matmul(&s.q_inv()).unwrap(), id);
        }
    }

    #[test]
    fn structure_matrices_are_right_multiplications() {
        let s = structure_matrices(1);
        assert_eq!(s.q, rho(I, 1));
        assert_eq!(s.r, rho(-J, 1));
        assert_eq!(s.s, rho(SplitQuaternion::K, 1));
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(ONE, 3), RealMatrix::identity(12));
        assert_eq!(rho(I, 1), RealMatrix::from_array4(I.right_rep()));
        let v = rho(I, 1).matmul(&stack(&scalar(J))).unwrap();
        assert_eq!(v, stack(&scalar(-SplitQuaternion::K)));
        assert_eq!(
            rho(SplitQuaternion::from_real(2.5), 2),
            RealMatrix::identity(8).scale(2.5)
        );
    }

    #[test]
    fn phi_extract_examples() {
        let a = SqMatrix::from_rows(&[[SplitQuaternion::new(1.0, -2.0, 0.5, 3.0), J, I]]);
        assert_eq!(phi_extract(phi(&a).matrix()).unwrap(), a);
        assert!(matches!(
            phi_extract(&RealMatrix::identity(4)),
            Err(Error::NotStructured { .. })
        ));
        assert_eq!(
            phi_extract(&RealMatrix::zeros(8, 4)).unwrap(),
            SqMatrix::zeros(2, 1)
        );
        assert!(phi_extract(&RealMatrix::zeros(6, 4)).is_err());
    }
}
