use thiserror::Error;

/// Every failure mode surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({0} vs {1})")]
    MixedFields(String, String),
    #[error("element has negative valuation {0}; it has no residue")]
    NegativeValuation(String),
    #[error("invalid field description: {0}")]
    InvalidField(String),
    #[error("the zero polynomial has no Newton polygon")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("log-radius {0} is outside the value group (type III point)")]
    TypeIIIPoint(String),
    #[error("resultant iterate dropped degree")]
    ResultantDegenerate,
    #[error("invalid dilation factors: {0}")]
    InvalidDilations(String),
    #[error("{0} lies in a gap of the model")]
    GapError(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
