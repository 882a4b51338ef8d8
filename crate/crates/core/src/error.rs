//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation error for patient {patient_id}: {message}")]
    Validation { patient_id: String, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("empty dataset: {0}")]
    EmptyDataset(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("training diverged at iteration {iteration}: {message}")]
    Divergence { iteration: u64, message: String },

    #[error("model file error: {0}")]
    ModelFormat(String),

    #[error("action vocabulary mismatch: {0}")]
    VocabularyMismatch(String),

    #[error("degenerate data: {0}")]
    Degenerate(String),

    #[error("invalid state: {0}")]
    State(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no logged support for action {action_id}")]
    UnsupportedAction { action_id: usize },
}

pub type Result<T> = std::result::Result<T, CoreError>;
