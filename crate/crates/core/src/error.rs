use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative element {0}; sets hold non-negative integers only")]
    NegativeElement(i128),

    #[error("element {0} exceeds the capacity bound 2^40")]
    CapacityExceeded(i128),

    #[error("invalid progression [{a}, ({step}), {b}]: {reason}")]
    BadProgression {
        a: i64,
        step: i64,
        b: i64,
        reason: &'static str,
    },

    #[error("sumset operand is empty")]
    EmptyOperand,

    #[error("0 is not an element, so the range is undefined")]
    MissingZero,

    #[error("segment length t = {0} must be at least 2")]
    InvalidSegmentLength(u64),

    #[error("placement has no segments (l = 0)")]
    EmptyPlacement,

    #[error("dense bit array of {0} bits is too large")]
    TooDense(u64),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
