use thiserror::Error;

use crate::scalars::Domain;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(Domain, Domain),

    #[error("fields of characteristic 2 are not supported")]
    CharTwoUnsupported,

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("unknown basis element `{0}`")]
    UnknownBasisName(String),

    #[error("the zero element cannot be an axis")]
    ZeroElement,

    #[error("type parameter {0} must differ from 0 and 1")]
    TypeParamInvalid(String),

    #[error("not an axis: {0}")]
    NotAnAxis(String),

    #[error("not an axis of Jordan type: {0}")]
    NotJordanAxis(String),

    #[error("left and right multiplication operators do not commute")]
    NonCommutingOps,

    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    EnumerationTooLarge { size: u128, cap: u128 },

    #[error("exhaustive enumeration requires a finite field, got {0}")]
    InfiniteField(Domain),

    #[error("expected a 2-dimensional algebra, got dimension {0}")]
    NotTwoDim(usize),

    #[error("the given elements do not generate the algebra")]
    NotGeneratedByGivenAxes,

    #[error("algebra generated by two axes has dimension {0} > 3")]
    DimExceedsThree(usize),

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("not the commutative 3-dimensional case: {0}")]
    NotCommutativeCase(String),

    #[error("automorphism check failed: {0}")]
    NotAutomorphism(String),
}
