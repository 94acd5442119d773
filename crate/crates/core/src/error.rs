use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix of {requested} entries exceeds the cap of {cap} entries")]
    DimensionCap { requested: usize, cap: usize },
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),
    #[error("{0} is not a supported prime")]
    NotPrime(u32),
    #[error("size mismatch: expected a partition of {expected}, got one of {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {0} is not in the principal block")]
    NotPrincipalBlock(String),
    #[error("invalid block label: {0}")]
    InvalidLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("module is not over the expected algebra: {0}")]
    ModuleMismatch(String),
    #[error("not a submodule: {0}")]
    NotSubmodule(String),
    #[error("not an idempotent")]
    NotIdempotent,
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("ledger error: {0}")]
    Ledger(String),
}

pub type Result<T> = std::result::Result<T, Error>;
