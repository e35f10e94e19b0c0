use thiserror::Error;

/// Errors raised by field, matrix and scheme operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial {0} is not primitive")]
    NotPrimitive(String),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not the image of a field element")]
    NotInImage,
    #[error("characteristic polynomial has repeated roots")]
    DegenerateSpectrum,
    #[error("inverse second-hop block s{0} is zero")]
    ZeroSBlock(&'static str),
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("invalid channel: {0}")]
    InvalidChannel(String),
    #[error("singular channel: {0}")]
    SingularChannel(String),
    #[error("channel is infeasible: {0}")]
    Infeasible(String),
    #[error("invalid message: {0}")]
    InvalidMessage(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
