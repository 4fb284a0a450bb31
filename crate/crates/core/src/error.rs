use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: i64, max: usize },
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree {degree} exceeds the factorization cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("integer too large to factor: {0}")]
    ValueTooLarge(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("dynamic-programming table of {cells} cells exceeds the budget of {budget}")]
    CapacityExceeded { cells: u128, budget: u128 },
    #[error("search needs {needed} nodes, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("witness cannot be translated: {0}")]
    UntranslatableWitness(String),
}

impl Error {
    /// Stable machine-readable tag for JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDivisor => "zero-divisor",
            Error::NotDivisible => "not-divisible",
            Error::OutOfRange { .. } => "out-of-range",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::NotMonic => "not-monic",
            Error::DegreeTooLarge { .. } => "degree-too-large",
            Error::ValueTooLarge(_) => "value-too-large",
            Error::InvalidInstance(_) => "invalid-instance",
            Error::CapacityExceeded { .. } => "capacity-exceeded",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::UntranslatableWitness(_) => "untranslatable-witness",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
