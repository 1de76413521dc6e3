//! Failures mapped onto the process exit-code contract.

use sqmat::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or malformed input, or an invalid option value.
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Shape(_) => 3,
            CliError::NoSolution(_) => 4,
            CliError::Singular(_) => 5,
            CliError::Numeric(_) | CliError::Io(_) => 6,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::ShapeMismatch { .. }
            | CoreError::NotSquare { .. }
            | CoreError::TooLarge { .. } => CliError::Shape(msg),
            CoreError::Singular { .. }
            | CoreError::NullDivisor { .. }
            | CoreError::ZeroNorm
            | CoreError::DegenerateDenominator => CliError::Singular(msg),
            CoreError::MixedCharacter
            | CoreError::RealInput
            | CoreError::FormulaInapplicable { .. }
            | CoreError::NotStructured { .. }
            | CoreError::NoConvergence { .. }
            | CoreError::EmptyNullSpace { .. }
            | CoreError::ZeroVector
            | CoreError::NonComplexLambda
            | CoreError::InternalResidualFailure { .. } => CliError::Numeric(msg),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
