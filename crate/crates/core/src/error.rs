use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: {1}")]
    InvalidPartition(Vec<u32>, &'static str),

    #[error("the zero partition has no double")]
    ZeroPartition,

    #[error("weight {weight} exceeds the limit {limit}")]
    WeightOverflow { weight: u32, limit: u32 },

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(u32, u32),

    #[error("exp requires a zero constant term")]
    NonzeroConstant,

    #[error("even time index t_{0}; only odd times exist")]
    EvenIndex(u32),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid r-spec: {0}")]
    InvalidSpec(String),

    #[error("r({0}) is not defined by this spec")]
    Undefined(i64),

    #[error("matrix dimension {0} is odd")]
    OddDimension(usize),

    #[error("malformed input: {0}")]
    Parse(String),
}
