use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown algebra name {0:?}")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("reduction at degree {degree} is incompatible: [g_{j}, g_{k}] not contained in the reduced subspace")]
    ReductionIncompatible { degree: i32, j: i32, k: i32 },
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("polynomial degree cap {cap} exceeded at derived-flag level {level}")]
    DegreeCap { cap: u32, level: usize },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
