use thiserror::Error;

use crate::parser::ParseError;

/// Errors raised by ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("zero polynomial is not allowed as {0}")]
    ZeroPolynomial(&'static str),

    #[error("{0} must not be empty")]
    Empty(&'static str),

    #[error("monomial order precondition violated: {0}")]
    OrderPrecondition(String),

    #[error("invalid variable sequence: {0}")]
    InvalidVariables(String),

    #[error("scale factor must be a positive integer, got {0}")]
    InvalidScale(u64),

    #[error("coordinate {index} of the point is zero")]
    ZeroCoordinate { index: usize },

    #[error("operation requires a univariate argument, found arity {0}")]
    NotUnivariate(usize),

    #[error("atomicity is only defined for nonzero non-units")]
    UnitOrZero,

    #[error("variable index {index} out of range for arity {arity}")]
    VariableIndex { index: usize, arity: usize },

    #[error("exponent does not fit the target ring: {0}")]
    InadmissibleExponent(String),

    #[error("oracle bound {name} = {value} exceeds ceiling {ceiling}")]
    BoundExceeded { name: &'static str, value: u32, ceiling: u32 },

    #[error("numeric overflow: {0}")]
    Overflow(&'static str),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
