//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("ground-set size {0} unsupported (must be 1..=32)")]
    GroundSize(usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid marking: {0}")]
    InvalidMarking(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("configuration is rank-deficient: every maximal minor vanishes")]
    RankDeficient,
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
