//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by parsing, training, and inference.
#[derive(Debug, Error)]
pub enum MihtError {
    /// Malformed `.ts` input; `line` is 1-based within the stream.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Invalid configuration (hyperparameters, dataset shape).
    #[error("configuration error: {0}")]
    Config(String),

    /// Invalid argument to an operation (shape or domain violation).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// Model file is malformed or truncated.
    #[error("model format error: {0}")]
    ModelFormat(String),

    /// Model file was written by an incompatible schema version.
    #[error("model version mismatch: found {found:?}, expected {expected:?}")]
    VersionMismatch { found: String, expected: String },

    /// Test data classes do not match the classes the model was trained on.
    #[error("class set mismatch: model has {model:?}, data has {data:?}")]
    ClassSetMismatch { model: Vec<String>, data: Vec<String> },

    /// Series shape is incompatible with the model's attribute space.
    #[error("attribute mismatch: model expects {expected} attributes, input yields {found}")]
    AttributeMismatch { expected: usize, found: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, MihtError>;
