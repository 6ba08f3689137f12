use thiserror::Error;

/// Errors reported by this crate. Everything mathematical is total; errors
/// only signal malformed input or violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("rank deficient")]
    RankDeficient,

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("not a total order on the cycles")]
    InvalidOrder,

    #[error("functional is not generic: two cycles have equal averages")]
    NonGenericFunctional,

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("input out of supported range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
