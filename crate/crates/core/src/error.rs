//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while parsing or validating input data.
///
/// Validation failures name the first violated invariant so that a bad
/// file can be fixed without reading the loader source.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("group error: {0}")]
    Group(String),
    #[error("scalar error: {0}")]
    Scalar(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("schema error: {0}")]
    Schema(String),
}

/// Errors raised by operations on otherwise valid data (bad indices,
/// inapplicable moves, arity mismatches).
#[derive(Debug, Error)]
pub enum OpError {
    #[error("index out of range: {0}")]
    Index(String),
    #[error("move not applicable: {0}")]
    Inapplicable(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    Other(String),
}

pub type DataResult<T> = Result<T, DataError>;
pub type OpResult<T> = Result<T, OpError>;
