use thiserror::Error;

/// Errors raised by the library. Every variant is a refusal to compute, never a panic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series is not a unit (constant term is zero)")]
    NotAUnit,
    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("divergent: {0}")]
    Divergent(String),
    #[error("insufficient order: need at least {needed}, have {have}")]
    InsufficientOrder { needed: usize, have: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("linear system has no unique solution: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, Error>;
