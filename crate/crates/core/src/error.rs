use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero while folding a continued fraction")]
    DivisionByZero,

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("zero vector has no primitive direction")]
    ZeroVector,

    #[error("degenerate cone: the two rays are proportional")]
    DegenerateCone,

    #[error("regular cone: operation requires a non-regular cone")]
    RegularCone,

    #[error("intersection matrix is not negative definite")]
    NotContractible,

    #[error("graph is not connected")]
    Disconnected,

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("invalid cusp cycle: {0}")]
    InvalidCycle(String),

    #[error("trace formula needs a cycle of length at least 2")]
    CycleTooShort,

    #[error("value too large to materialize: {0}")]
    TooLarge(String),

    #[error("malformed graph JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
