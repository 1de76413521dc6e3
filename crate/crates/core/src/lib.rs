//! Split quaternion scalar and matrix algebra.
//!
//! Split quaternions `q = q0 + q1 i + q2 j + q3 k` obey `i² = -1`, `j² = k² = 1`,
//! `ij = -ji = k`, `jk = -kj = -i`, `ki = -ik = j`. Unlike Hamilton quaternions
//! they contain zero divisors, so most matrix work here goes through the
//! real representation `φ_A` (a 4m×4n real matrix) or the complex adjoint `χ_A`.
//!
//! The crate is `no_std` and only needs `alloc`:
//!
//! - [`scalar`]: arithmetic, norms, causal character, 4×4 representations,
//!   scalar consimilarity and square roots.
//! - [`dense`]: the generic row-major [`Matrix`] used for real, complex and
//!   split quaternion entries.
//! - [`densemat`]: split quaternion matrix operations (conjugations, complex
//!   adjoint, inversion, consimilarity).
//! - [`realrep`]: `φ_A`, stacking, and the structure matrices `P, Q, R, S, ε₂`.
//! - [`numkernel`]: LU, general solve with null spaces, Kronecker products and
//!   a real nonsymmetric eigensolver.
//! - [`spectral`]: coneigenvalues and coneigenvectors.
//! - [`stein`]: solver for `X - A X̃ B = C`.

#![no_std]
// `!(x <= tol)` is used on purpose so that NaN counts as a failure.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod dense;
pub mod densemat;
mod error;
pub mod numkernel;
pub mod realrep;
pub mod scalar;
pub mod spectral;
pub mod stein;

pub use dense::{ComplexMatrix, Field, Matrix, RealMatrix, Ring, SqMatrix};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use scalar::{CausalCharacter, ConsimSolutionFamily, SplitQuaternion};
