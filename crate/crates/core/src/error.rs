//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("inconsistent presentation `{name}`: {detail}")]
    Inconsistent { name: String, detail: String },

    #[error("group order {order} exceeds configured bound {bound}")]
    OrderBound { order: u128, bound: u128 },

    #[error("character table budget exceeded: {detail}")]
    Budget { detail: String },

    #[error("invalid covering: {0}")]
    Covering(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
}
