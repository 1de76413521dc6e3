#![allow(dead_code)]

use proptest::prelude::*;
use sqmat::{RealMatrix, SplitQuaternion, SqMatrix};

pub fn coeff() -> impl Strategy<Value = f64> {
    -2.0f64..2.0
}

pub fn quaternion() -> impl Strategy<Value = SplitQuaternion> {
    (coeff(), coeff(), coeff(), coeff()).prop_map(|(a, b, c, d)| SplitQuaternion::new(a, b, c, d))
}

pub fn integer_quaternion() -> impl Strategy<Value = SplitQuaternion> {
    (-50i32..50, -50i32..50, -50i32..50, -50i32..50)
        .prop_map(|(a, b, c, d)| SplitQuaternion::new(a as f64, b as f64, c as f64, d as f64))
}

pub fn sq_matrix(rows: usize, cols: usize) -> impl Strategy<Value = SqMatrix> {
    prop::collection::vec(quaternion(), rows * cols)
        .prop_map(move |v| SqMatrix::new(rows, cols, v).unwrap())
}

pub fn square(max: usize) -> impl Strategy<Value = SqMatrix> {
    (1..=max).prop_flat_map(|n| sq_matrix(n, n))
}

pub fn real_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RealMatrix> {
    prop::collection::vec(coeff(), rows * cols)
        .prop_map(move |v| RealMatrix::new(rows, cols, v).unwrap())
}

pub fn rep_diff(a: [[f64; 4]; 4], b: [[f64; 4]; 4]) -> f64 {
    let mut d = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            d = d.max((a[i][j] - b[i][j]).abs());
        }
    }
    d
}

pub fn rep_mul(a: [[f64; 4]; 4], b: [[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut c = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            c[i][j] = (0..4).map(|t| a[i][t] * b[t][j]).sum();
        }
    }
    c
}

/// `‖M⁻¹‖`-style guard: the smallest singular value of `φ_A` relative to
/// its largest, from an SVD oracle.
pub fn phi_condition_ok(a: &SqMatrix, min_ratio: f64) -> bool {
    let phi = sqmat::realrep::phi(a).into_matrix();
    let m = nalgebra::DMatrix::from_row_slice(phi.rows(), phi.cols(), phi.as_slice());
    let sv = m.singular_values();
    let max = sv.max();
    max > 0.0 && sv.min() / max > min_ratio
}
