use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid sign sequence: {0}")]
    InvalidSequence(String),
    #[error("sequence is not closable to a cup diagram: {0}")]
    NotClosable(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("arc ({0},{1}) is not part of the diagram")]
    ForeignArc(usize, usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("elements live in different spaces: {0}")]
    SpaceMismatch(String),
    #[error("series did not terminate within {0} terms")]
    NonTerminating(usize),
    #[error("nonzero tail: quotient has dimension {dim} in degree {degree}")]
    NonzeroTail { degree: usize, dim: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
