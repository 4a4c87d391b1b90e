//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse in GF(4)")]
    ZeroInverse,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is not of full row rank: rank {rank}, rows {rows}")]
    Rank { rank: usize, rows: usize },

    #[error("minimum distance is undefined for a code of dimension 0")]
    UndefinedDistance,

    #[error("resource guard exceeded: {0}")]
    Resource(String),

    #[error("operation leaves an empty code: {0}")]
    EmptyCode(String),

    #[error("a line needs two distinct points")]
    DegenerateLine,

    #[error("parameters out of range: {0}")]
    Range(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    /// 1-based coordinates that have no qualifying repair set.
    #[error("locality fails at coordinates {coords:?}")]
    LocalityFailure { coords: Vec<usize> },

    #[error("structure error: {0}")]
    Structure(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
