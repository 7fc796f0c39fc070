//! Crate-wide error type.

use thiserror::Error;

/// Every failure a library operation can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input (literals, symbols, words, CSV cells).
    #[error("parse error: {0}")]
    Parse(String),
    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// An arithmetic operation has no exact answer (division by zero, non-integral result).
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// Shipped or user-supplied data failed a structural check.
    #[error("data error: {0}")]
    Data(String),
    /// Content hash mismatch or missing data files.
    #[error("data integrity error: {0}")]
    Integrity(String),
    /// A computation exceeded its configured safety limit.
    #[error("limit exceeded: {0}")]
    Limit(String),
    /// The requested case is outside what is implemented.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Filesystem failure.
    #[error("i/o error: {0}")]
    Io(String),
}

/// Convenience alias.
pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
