use thiserror::Error;

/// Errors raised by fareyforge operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates an operation's precondition.
    #[error("input error: {0}")]
    Input(String),
    /// A serialized document is malformed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A configured resource cap was exceeded.
    #[error("resource error: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
