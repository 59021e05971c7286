use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("element is not in the group: {0}")]
    NotInGroup(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("key generation failed: candidate stream exhausted")]
    KeygenFailure,
    #[error("invalid public base: {0}")]
    InvalidBase(String),
    #[error("protocol failure, parties disagree; transcript: {transcript}")]
    ProtocolFailure { transcript: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
