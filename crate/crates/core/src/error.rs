use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("sequence offset must be 0 for the binomial transform, got {0}")]
    NonzeroOffset(usize),

    #[error("sequence is empty")]
    EmptySequence,

    /// A division that the underlying identity guarantees to be exact left a
    /// remainder. This can only happen through a bug in a kernel.
    #[error("internal error: inexact division in {0}")]
    InexactDivision(String),

    #[error("b-file line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("b-file line {line}: expected index {expected}, found {found}")]
    NonContiguous {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error("no overlapping terms to compare")]
    EmptyOverlap,

    #[error("malformed A-number {0:?}: expected 'A' followed by 6 digits")]
    MalformedANumber(String),

    #[error("no local b-file for {0}; rerun with --fetch to download it")]
    SnapshotMissing(String),

    #[error("network error: {0}")]
    Network(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
