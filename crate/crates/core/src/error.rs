use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("split quaternion is a zero divisor (I_q = {quadratic_form:.3e})")]
    NullDivisor { quadratic_form: f64 },
    #[error("consimilarity needs both inputs timelike or both spacelike")]
    MixedCharacter,
    #[error("input is real; the formula requires a non-real split quaternion")]
    RealInput,
    #[error("input has zero norm")]
    ZeroNorm,
    #[error("denominator ‖‖a‖ + a‖ vanishes")]
    DegenerateDenominator,
    #[error("closed-form result failed verification (residual {residual:.3e})")]
    FormulaInapplicable { residual: f64 },
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular (pivot {pivot:.3e} below threshold {threshold:.3e})")]
    Singular { pivot: f64, threshold: f64 },
    #[error("real matrix does not carry the φ block structure (deviation {deviation:.3e})")]
    NotStructured { deviation: f64 },
    #[error("eigenvalue iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("no coneigenvector for λ = {re} + {im} i: null space of φ_A - ρ(λ) is empty")]
    EmptyNullSpace { re: f64, im: f64 },
    #[error("coneigenvector is zero")]
    ZeroVector,
    #[error("coneigenvalue has nonzero j or k part")]
    NonComplexLambda,
    #[error("problem too large: m·n = {size} exceeds {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("extracted solution fails the quaternionic residual check ({residual:.3e} > {tolerance:.3e})")]
    InternalResidualFailure { residual: f64, tolerance: f64 },
}
