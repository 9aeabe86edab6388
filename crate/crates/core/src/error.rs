use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("power series divisor has a zero constant term")]
    ZeroConstantTerm,
    #[error("lambda coefficient requires r >= 1 and 0 <= k < r (got r = {r}, k = {k})")]
    LambdaIndex { r: usize, k: usize },
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}
