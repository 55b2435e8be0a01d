use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("spin must satisfy 2s >= 1, got 2s = {0}")]
    InvalidSpin(u32),
    #[error("spin {0} is not a positive half-integer")]
    NonHalfInteger(String),
    #[error("invalid direction: {0}")]
    InvalidDirection(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("pairwise exchange sum {pair} vanishes while field component {field} is nonzero")]
    DegenerateDenominator { pair: &'static str, field: &'static str },
    #[error("term for {field} is 0/0 ({pair} and {field} both vanish); verify with the eigen residual instead")]
    IndeterminateTerm { pair: &'static str, field: &'static str },
    #[error("factorization condition violated: residual {residual:e} exceeds tolerance {tolerance:e}")]
    ConditionViolated { residual: f64, tolerance: f64 },
    #[error("all quadratic coefficients vanish; angles are not constrained by the parameters")]
    AllCoefficientsZero,
    #[error("polar angle too close to pi: tan(theta/2) is not finite")]
    PoleDegeneracy,
    #[error("no singular value below the nullspace threshold (smallest relative value {0:e})")]
    EmptyNullspace(f64),
    #[error("no sign change of the condition residual in the scanned range")]
    NoRoot,
    #[error("Hilbert space dimension exceeds budget of {budget}")]
    BudgetExceeded { budget: usize },
}

impl Error {
    /// Stable identifier used in machine-readable reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidSpin(_) => "InvalidSpin",
            Error::NonHalfInteger(_) => "NonHalfInteger",
            Error::InvalidDirection(_) => "InvalidDirection",
            Error::InvalidLattice(_) => "InvalidLattice",
            Error::InvalidParams(_) => "InvalidParams",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DegenerateDenominator { .. } => "DegenerateDenominator",
            Error::IndeterminateTerm { .. } => "IndeterminateTerm",
            Error::ConditionViolated { .. } => "ConditionViolated",
            Error::AllCoefficientsZero => "AllCoefficientsZero",
            Error::PoleDegeneracy => "PoleDegeneracy",
            Error::EmptyNullspace(_) => "EmptyNullspace",
            Error::NoRoot => "NoRoot",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
        }
    }
}
