use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group of order {order} is too large to enumerate (cap {cap})")]
    TooLarge { order: u128, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("no prime p = 1 mod {exponent} with p > {lower} below {bound}")]
    NoSuitablePrime { exponent: u64, lower: u64, bound: u64 },

    #[error("construction check failed: {0}")]
    Construction(String),
}
