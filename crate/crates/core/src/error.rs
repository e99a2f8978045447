use thiserror::Error;

use crate::formulas::FormulaId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series order {order} too small for coefficient {needed}")]
    OrderTooSmall { order: usize, needed: usize },

    #[error("brute-force enumeration limited to n <= {max}, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("stirling triangle covers rows 0..={max_n}, row {needed} requested")]
    InsufficientTriangle { max_n: usize, needed: usize },

    #[error("{formula} is not applicable at index {n}")]
    NotApplicable { formula: FormulaId, n: usize },

    #[error("index {n} out of range: {reason}")]
    InvalidIndex { n: usize, reason: &'static str },

    #[error("unknown formula `{0}`")]
    UnknownFormula(String),

    #[error("internal arithmetic error: {0}")]
    Internal(String),

    #[error("cache format error at line {line}: {message}")]
    CacheFormat { line: usize, message: String },

    #[error("unsupported cache version `{0}`")]
    CacheVersion(String),

    #[error("cache invariant violated: {0}")]
    CacheInvariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
