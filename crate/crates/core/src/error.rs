use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus is reducible: found common factor {0}")]
    ReducibleModulus(String),
    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("undefined name `{0}`")]
    UndefinedName(String),
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("polynomial is not squarefree: gcd with derivative is {0}")]
    NotSquarefree(String),
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("point {0} does not lie on the variety")]
    PointOffVariety(String),
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("point {0} is not on the variety")]
    PointNotOnVariety(String),
    #[error("ill-formed map: {0}")]
    IllFormedMap(String),
    #[error("unsupported diagram shape: {0}")]
    UnsupportedShape(String),
    #[error("regularity hypothesis cannot be verified: {0}")]
    RegularityUnknown(String),
    #[error("zero direction vector")]
    ZeroDirection,
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

impl AlgebraError {
    /// The variant name, e.g. `NotZeroDimensional`.
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraError::ZeroDenominator => "ZeroDenominator",
            AlgebraError::DivisionByZero => "DivisionByZero",
            AlgebraError::ReducibleModulus(_) => "ReducibleModulus",
            AlgebraError::InvalidModulus(_) => "InvalidModulus",
            AlgebraError::DimensionMismatch(_) => "DimensionMismatch",
            AlgebraError::InvalidOrder(_) => "InvalidOrder",
            AlgebraError::Parse(_) => "SyntaxError",
            AlgebraError::UndefinedName(_) => "UndefinedName",
            AlgebraError::NotZeroDimensional(_) => "NotZeroDimensional",
            AlgebraError::NotSquarefree(_) => "NotSquarefree",
            AlgebraError::NotMonic(_) => "NotMonic",
            AlgebraError::PointOffVariety(_) => "PointOffVariety",
            AlgebraError::DuplicatePoint(_) => "DuplicatePoint",
            AlgebraError::PointNotOnVariety(_) => "PointNotOnVariety",
            AlgebraError::IllFormedMap(_) => "IllFormedMap",
            AlgebraError::UnsupportedShape(_) => "UnsupportedShape",
            AlgebraError::RegularityUnknown(_) => "RegularityUnknown",
            AlgebraError::ZeroDirection => "ZeroDirection",
        }
    }
}
