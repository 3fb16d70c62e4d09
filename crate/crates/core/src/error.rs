use thiserror::Error;

use crate::recognize::NotLensReason;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },

    #[error("modulus must be positive, got {0}")]
    InvalidModulus(i64),

    #[error("pair {index} has alpha = 0")]
    ZeroAlpha { index: usize },

    #[error("pair {index} ({alpha},{beta}) is not coprime")]
    NotCoprimePair { index: usize, alpha: i64, beta: i64 },

    #[error("inapplicable move: {0}")]
    InapplicableMove(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("weights must be non-zero")]
    ZeroWeight,

    #[error("weights {0} and {1} are not coprime")]
    WeightsNotCoprime(i64, i64),

    #[error("p = 0 is handled by the S2 x S1 family, not the general construction")]
    ZeroP,

    #[error("argument out of range: {0}")]
    InvalidRange(String),

    #[error("not a lens space: {0}")]
    NotLensSpace(NotLensReason),

    #[error("class count {found} does not match the predicted {expected} ({case})")]
    PredictionMismatch {
        case: String,
        expected: usize,
        found: usize,
    },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
