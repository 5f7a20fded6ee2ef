use thiserror::Error;

/// Errors raised by module construction, Hom solving and parameter validation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("weight {0} is not dominant")]
    NonDominant(String),

    #[error("torus mismatch: {0} vs {1}")]
    TorusMismatch(String, String),

    #[error("action mismatch: {0}")]
    ActionMismatch(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degree {p} out of range for a module of dimension {dim}")]
    DegreeOutOfRange { p: usize, dim: usize },

    #[error("vector is not in the span of the basis")]
    NotInSpan,

    #[error("parity constraint violated: {0}")]
    Parity(String),

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("resource guard: {0}")]
    ResourceGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
