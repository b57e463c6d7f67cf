use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Shapes or degrees do not fit together.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// A literal (partition, permutation, weight, ...) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A polynomial division that was expected to be exact left a remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn dimension<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Dimension(msg.into()))
}
