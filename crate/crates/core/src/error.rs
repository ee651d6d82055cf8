use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InvalidInput` and `BoundExceeded` signal caller mistakes (bad parameters,
/// oracle guard rails); `Verification` signals that a constructed witness
/// failed its own independent re-check, which always indicates a bug rather
/// than a recoverable condition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn bound(msg: impl Into<String>) -> Self {
        Error::BoundExceeded(msg.into())
    }

    pub fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
}
