use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input string is empty")]
    EmptyString,

    #[error("invalid bit symbol {0:?} (expected '0' or '1')")]
    InvalidSymbol(char),

    #[error("matrix needs at least one row and rows of equal, non-zero length")]
    RaggedMatrix,

    #[error("{0}")]
    Domain(String),

    #[error("refusing oversized exhaustive run: {0}")]
    Refused(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn refused(msg: impl Into<String>) -> Self {
        Error::Refused(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
