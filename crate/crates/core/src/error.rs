//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by parsing, shape construction, and polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be strictly decreasing: {prev} is followed by {next}")]
    NotStrictlyDecreasing { prev: u32, next: u32 },

    #[error("partition parts must be positive")]
    NonPositivePart,

    #[error("malformed partition token `{0}`")]
    MalformedToken(String),

    #[error("inner partition does not fit inside the outer partition")]
    NotContained,

    #[error("index {index} is out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("tableau entries do not cover the shape cells exactly")]
    ShapeMismatch,

    #[error("polynomial degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("polynomial variable counts differ: {0} vs {1}")]
    VarCountMismatch(usize, usize),

    #[error("enumerated an amenable filling with non-strict content {0:?}; this is a bug")]
    InternalNonStrictContent(Vec<u32>),

    #[error("cell component is not a path")]
    NotAPath,

    #[error("malformed word token `{0}`")]
    MalformedWordToken(String),
}

pub type Result<T> = std::result::Result<T, Error>;
