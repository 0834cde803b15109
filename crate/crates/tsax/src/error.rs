//! Crate-wide error type.

use std::io;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input data violates a precondition (empty series, non-finite values, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configuration value is out of its accepted range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two representations cannot be compared (different m, n, or alphabet).
    #[error("incompatible representations: {0}")]
    Incompatible(String),

    /// A data file has the wrong row structure.
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },

    /// A field in a data file is not a number.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A serialized representation is corrupt or truncated.
    #[error("decode error: {0}")]
    Decode(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
