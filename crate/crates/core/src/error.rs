use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank/family mismatch: {0}")]
    Mismatch(String),
    #[error("{0} is not a root of this datum")]
    NotARoot(String),
    #[error("index {0} out of range for this datum")]
    IndexOutOfRange(usize),
    #[error("{0} is not a minimal coset representative")]
    NotMinimalRep(String),
    #[error("invalid column: clause {clause} violated{detail}")]
    InvalidColumn { clause: &'static str, detail: String },
    #[error("column cannot be split (no admissible choice at step {step})")]
    CannotSplit { step: usize },
    #[error("invalid QLS path: {0}")]
    InvalidPath(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
