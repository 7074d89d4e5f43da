use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root type: {0}")]
    InvalidType(String),
    #[error("root index {index} out of range (system has {len} positive roots)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("data file error: {0}")]
    Data(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("over budget: {0}")]
    Budget(String),
    #[error("field error: {0}")]
    Field(String),
}

pub type Result<T> = std::result::Result<T, Error>;
