//! Dense real and complex kernels: LU solves, row-echelon solves with null
//! spaces, Kronecker products and a real nonsymmetric eigensolver.
//!
//! `vec` is column-major everywhere, so `kron(Nᵀ, M) · vec(Y) = vec(M Y N)`.

// Index loops follow the textbook formulations of these algorithms.
#![allow(clippy::needless_range_loop)]

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;

use crate::dense::{ComplexMatrix, Field, Matrix, RealMatrix, Ring};
use crate::error::{Error, Result};

/// Relative pivot threshold: a pivot below `PIVOT_TOL · ‖M‖_∞` is singular.
pub const PIVOT_TOL: f64 = 1e-10;

/// LU factors with partial pivoting, packed in one matrix.
#[derive(Clone, Debug)]
pub struct Lu<T> {
    lu: Matrix<T>,
    perm: Vec<usize>,
}

impl<T: Field> Lu<T> {
    pub fn factor(m: &Matrix<T>) -> Result<Self> {
        Self::factor_with_tol(m, PIVOT_TOL)
    }

    /// Like [`Lu::factor`] with a caller-chosen relative pivot threshold.
    pub fn factor_with_tol(m: &Matrix<T>, tol: f64) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let threshold = tol * m.norm_inf();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (p, pivot) =
                (k..n)
                    .map(|i| (i, lu.get(i, k).modulus()))
                    .fold(
                        (k, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot <= threshold || pivot == 0.0 {
                return Err(Error::Singular { pivot, threshold });
            }
            if p != k {
                perm.swap(p, k);
                for j in 0..n {
                    let t = lu.get(k, j);
                    lu.set(k, j, lu.get(p, j));
                    lu.set(p, j, t);
                }
            }
            let d = lu.get(k, k);
            for i in (k + 1)..n {
                let f = lu.get(i, k) / d;
                lu.set(i, k, f);
                if f == T::zero() {
                    continue;
                }
                for j in (k + 1)..n {
                    let v = lu.get(i, j) - f * lu.get(k, j);
                    lu.set(i, j, v);
                }
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn solve(&self, k: &Matrix<T>) -> Result<Matrix<T>> {
        let n = self.lu.rows();
        if k.rows() != n {
            return Err(Error::ShapeMismatch {
                op: "lu_solve",
                left: self.lu.shape(),
                right: k.shape(),
            });
        }
        let mut x = Matrix::from_fn(n, k.cols(), |i, j| k.get(self.perm[i], j));
        for c in 0..k.cols() {
            for i in 0..n {
                let mut s = x.get(i, c);
                for j in 0..i {
                    s = s - self.lu.get(i, j) * x.get(j, c);
                }
                x.set(i, c, s);
            }
            for i in (0..n).rev() {
                let mut s = x.get(i, c);
                for j in (i + 1)..n {
                    s = s - self.lu.get(i, j) * x.get(j, c);
                }
                x.set(i, c, s / self.lu.get(i, i));
            }
        }
        Ok(x)
    }

    /// Determinant from the factors (sign from the permutation parity).
    pub fn determinant(&self) -> T {
        let n = self.lu.rows();
        let mut det = T::one();
        for i in 0..n {
            det = det * self.lu.get(i, i);
        }
        let mut seen = vec![false; n];
        let mut swaps = 0;
        for start in 0..n {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len > 0 {
                swaps += len - 1;
            }
        }
        if swaps % 2 == 1 {
            -det
        } else {
            det
        }
    }
}

/// Solves `M X = K` for square `M`.
pub fn lu_solve<T: Field>(m: &Matrix<T>, k: &Matrix<T>) -> Result<Matrix<T>> {
    Lu::factor(m)?.solve(k)
}

/// Complex instance of [`lu_solve`].
pub fn complex_lu_solve(m: &ComplexMatrix, k: &ComplexMatrix) -> Result<ComplexMatrix> {
    lu_solve(m, k)
}

pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>> {
    lu_solve(m, &Matrix::identity(m.rows()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveKind {
    Unique,
    Underdetermined,
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolveOutcome {
    pub kind: SolveKind,
    /// Free variables set to zero. `None` when inconsistent.
    pub particular: Option<Vec<f64>>,
    /// One column per free variable.
    pub null_basis: Vec<Vec<f64>>,
    pub rank: usize,
}

/// Gauss-Jordan elimination with partial pivoting on `M x = k`.
///
/// Columns whose best remaining pivot is at most `tol · ‖M‖_∞` are free.
/// Leftover right-hand-side entries larger than
/// `tol · max(1, ‖M‖_∞) · (1 + ‖k‖_∞)` make the system inconsistent.
pub fn solve_general(m: &RealMatrix, k: &[f64], tol: f64) -> LinearSolveOutcome {
    let (p, q) = m.shape();
    assert_eq!(k.len(), p, "right-hand side length must match row count");
    let mnorm = m.norm_inf();
    let knorm = k.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let threshold = tol * mnorm;
    let mut a = m.clone();
    let mut rhs = k.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..q {
        if r >= p {
            break;
        }
        let (best, val) = (r..p)
            .map(|i| (i, a.get(i, c).abs()))
            .fold((r, -1.0), |b, cur| if cur.1 > b.1 { cur } else { b });
        if val <= threshold || val == 0.0 {
            for i in r..p {
                a.set(i, c, 0.0);
            }
            continue;
        }
        if best != r {
            for j in 0..q {
                let t = a.get(r, j);
                a.set(r, j, a.get(best, j));
                a.set(best, j, t);
            }
            rhs.swap(r, best);
        }
        let d = a.get(r, c);
        for j in 0..q {
            a.set(r, j, a.get(r, j) / d);
        }
        a.set(r, c, 1.0);
        rhs[r] /= d;
        for i in 0..p {
            if i == r {
                continue;
            }
            let f = a.get(i, c);
            if f == 0.0 {
                continue;
            }
            for j in 0..q {
                a.set(i, j, a.get(i, j) - f * a.get(r, j));
            }
            a.set(i, c, 0.0);
            rhs[i] -= f * rhs[r];
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    let consistency = tol * mnorm.max(1.0) * (1.0 + knorm);
    if rhs[rank..].iter().any(|v| v.abs() > consistency) {
        return LinearSolveOutcome {
            kind: SolveKind::Inconsistent,
            particular: None,
            null_basis: Vec::new(),
            rank,
        };
    }
    let mut x = vec![0.0; q];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = rhs[row];
    }
    let mut is_pivot = vec![false; q];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let null_basis: Vec<Vec<f64>> = (0..q)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0.0; q];
            v[f] = 1.0;
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -a.get(row, f);
            }
            v
        })
        .collect();
    let kind = if null_basis.is_empty() {
        SolveKind::Unique
    } else {
        SolveKind::Underdetermined
    };
    LinearSolveOutcome {
        kind,
        particular: Some(x),
        null_basis,
        rank,
    }
}

pub fn kron<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let (br, bc) = b.shape();
    Matrix::from_fn(a.rows() * br, a.cols() * bc, |i, j| {
        a.get(i / br, j / bc) * b.get(i % br, j % bc)
    })
}

/// Eigenvalues of a real square matrix, as a multiset.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<Complex64>,
}

impl Spectrum {
    /// Sorted by descending real part, then descending imaginary part.
    pub fn new(mut values: Vec<Complex64>) -> Self {
        values.sort_by(|a, b| match b.re.total_cmp(&a.re) {
            Ordering::Equal => b.im.total_cmp(&a.im),
            o => o,
        });
        Self { values }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Complex64> {
        self.values.iter()
    }

    /// Distinct values, merging entries closer than `tol`.
    pub fn distinct(&self, tol: f64) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = Vec::new();
        for &v in &self.values {
            if !out.iter().any(|u| (u - v).norm() <= tol) {
                out.push(v);
            }
        }
        out
    }

    /// Largest distance in a greedy nearest-pair matching against `other`.
    /// Returns infinity when the sizes differ.
    pub fn matching_distance(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        let mut used = vec![false; other.len()];
        let mut worst = 0.0f64;
        for a in &self.values {
            let mut best: Option<(usize, f64)> = None;
            for (idx, b) in other.values.iter().enumerate() {
                if used[idx] {
                    continue;
                }
                let d = (a - b).norm();
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some((idx, d));
                }
            }
            let (idx, d) = best.expect("sizes match");
            used[idx] = true;
            worst = worst.max(d);
        }
        worst
    }
}

/// Subdiagonal entries below `DEFLATION_TOL (|h_ii| + |h_{i+1,i+1}|)` are zeroed.
const DEFLATION_TOL: f64 = 1e-12;

/// Eigenvalues by balancing, Householder reduction to Hessenberg form and
/// Francis double-shift QR iteration.
pub fn eigenvalues(m: &RealMatrix) -> Result<Spectrum> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect();
    balance(&mut a);
    hessenberg(&mut a);
    hqr(&mut a).map(Spectrum::new)
}

fn balance(a: &mut [Vec<f64>]) {
    const RADIX: f64 = 2.0;
    let sqrdx = RADIX * RADIX;
    let n = a.len();
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[j][i].abs();
                    r += a[i][j].abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / RADIX;
                let mut f = 1.0;
                let s = c + r;
                while c < g {
                    f *= RADIX;
                    c *= sqrdx;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= sqrdx;
                }
                if (c + r) / f < 0.95 * s {
                    done = false;
                    let g = 1.0 / f;
                    for j in 0..n {
                        a[i][j] *= g;
                    }
                    for row in a.iter_mut() {
                        row[i] *= f;
                    }
                }
            }
        }
    }
}

fn hessenberg(h: &mut [Vec<f64>]) {
    let n = h.len();
    if n < 3 {
        return;
    }
    let high = n - 1;
    let mut ort = vec![0.0; n];
    for m in 1..high {
        let scale: f64 = (m..=high).map(|i| h[i][m - 1].abs()).sum();
        if scale == 0.0 {
            continue;
        }
        let mut hh = 0.0;
        for i in (m..=high).rev() {
            ort[i] = h[i][m - 1] / scale;
            hh += ort[i] * ort[i];
        }
        let mut g = libm::sqrt(hh);
        if ort[m] > 0.0 {
            g = -g;
        }
        hh -= ort[m] * g;
        ort[m] -= g;
        for j in m..n {
            let mut f = 0.0;
            for i in (m..=high).rev() {
                f += ort[i] * h[i][j];
            }
            f /= hh;
            for i in m..=high {
                h[i][j] -= f * ort[i];
            }
        }
        for row in h.iter_mut() {
            let mut f = 0.0;
            for j in (m..=high).rev() {
                f += ort[j] * row[j];
            }
            f /= hh;
            for j in m..=high {
                row[j] -= f * ort[j];
            }
        }
        ort[m] *= scale;
        h[m][m - 1] = scale * g;
    }
    for (i, row) in h.iter_mut().enumerate() {
        for v in row.iter_mut().take(i.saturating_sub(1)) {
            *v = 0.0;
        }
    }
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix.
fn hqr(a: &mut [Vec<f64>]) -> Result<Vec<Complex64>> {
    let n = a.len() as isize;
    let mut out = vec![Complex64::new(0.0, 0.0); n as usize];
    let max_sweeps = 100 * (n as usize).max(1);
    let mut sweeps = 0usize;
    let mut anorm = 0.0;
    for i in 0..n as usize {
        for j in i.saturating_sub(1)..n as usize {
            anorm += a[i][j].abs();
        }
    }
    let mut nn = n - 1;
    let mut t = 0.0;
    let (mut p, mut q, mut r) = (0.0f64, 0.0f64, 0.0f64);
    let (mut x, mut y, mut z, mut w);
    macro_rules! at {
        ($i:expr, $j:expr) => {
            a[($i) as usize][($j) as usize]
        };
    }
    while nn >= 0 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l > 0 {
                let mut s = at!(l - 1, l - 1).abs() + at!(l, l).abs();
                if s == 0.0 {
                    s = anorm;
                }
                if at!(l, l - 1).abs() <= DEFLATION_TOL * s {
                    at!(l, l - 1) = 0.0;
                    break;
                }
                l -= 1;
            }
            x = at!(nn, nn);
            if l == nn {
                out[nn as usize] = Complex64::new(x + t, 0.0);
                nn -= 1;
            } else {
                y = at!(nn - 1, nn - 1);
                w = at!(nn, nn - 1) * at!(nn - 1, nn);
                if l == nn - 1 {
                    p = 0.5 * (y - x);
                    q = p * p + w;
                    z = libm::sqrt(q.abs());
                    x += t;
                    if q >= 0.0 {
                        z = p + sign(z, p);
                        out[nn as usize - 1] = Complex64::new(x + z, 0.0);
                        out[nn as usize] =
                            Complex64::new(if z != 0.0 { x - w / z } else { x + z }, 0.0);
                    } else {
                        out[nn as usize] = Complex64::new(x + p, -z);
                        out[nn as usize - 1] = Complex64::new(x + p, z);
                    }
                    nn -= 2;
                } else {
                    sweeps += 1;
                    if sweeps > max_sweeps {
                        return Err(Error::NoConvergence { sweeps: max_sweeps });
                    }
                    if its > 0 && its % 10 == 0 {
                        // exceptional shift
                        t += x;
                        for i in 0..=nn {
                            at!(i, i) -= x;
                        }
                        let s = at!(nn, nn - 1).abs() + at!(nn - 1, nn - 2).abs();
                        x = 0.75 * s;
                        y = x;
                        w = -0.4375 * s * s;
                    }
                    its += 1;
                    let mut m = nn - 2;
                    while m >= l {
                        z = at!(m, m);
                        r = x - z;
                        let s0 = y - z;
                        p = (r * s0 - w) / at!(m + 1, m) + at!(m, m + 1);
                        q = at!(m + 1, m + 1) - z - r - s0;
                        r = at!(m + 2, m + 1);
                        let s = p.abs() + q.abs() + r.abs();
                        p /= s;
                        q /= s;
                        r /= s;
                        if m == l {
                            break;
                        }
                        let u = at!(m, m - 1).abs() * (q.abs() + r.abs());
                        let v =
                            p.abs() * (at!(m - 1, m - 1).abs() + z.abs() + at!(m + 1, m + 1).abs());
                        if u <= f64::EPSILON * v {
                            break;
                        }
                        m -= 1;
                    }
                    for i in m..(nn - 1) {
                        at!(i + 2, i) = 0.0;
                        if i != m {
                            at!(i + 2, i - 1) = 0.0;
                        }
                    }
                    let mut k = m;
                    while k < nn {
                        if k != m {
                            p = at!(k, k - 1);
                            q = at!(k + 1, k - 1);
                            r = 0.0;
                            if k + 1 != nn {
                                r = at!(k + 2, k - 1);
                            }
                            x = p.abs() + q.abs() + r.abs();
                            if x != 0.0 {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        let s = sign(libm::sqrt(p * p + q * q + r * r), p);
                        if s != 0.0 {
                            if k == m {
                                if l != m {
                                    at!(k, k - 1) = -at!(k, k - 1);
                                }
                            } else {
                                at!(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for j in k..=nn {
                                p = at!(k, j) + q * at!(k + 1, j);
                                if k + 1 != nn {
                                    p += r * at!(k + 2, j);
                                    at!(k + 2, j) -= p * z;
                                }
                                at!(k + 1, j) -= p * y;
                                at!(k, j) -= p * x;
                            }
                            let mmin = if nn < k + 3 { nn } else { k + 3 };
                            for i in l..=mmin {
                                p = x * at!(i, k) + y * at!(i, k + 1);
                                if k + 1 != nn {
                                    p += z * at!(i, k + 2);
                                    at!(i, k + 2) -= p * r;
                                }
                                at!(i, k + 1) -= p * q;
                                at!(i, k) -= p;
                            }
                        }
                        k += 1;
                    }
                }
            }
            if l + 1 >= nn {
                break;
            }
        }
    }
    Ok(out)
}
