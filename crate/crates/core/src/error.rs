use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("non-finite input")]
    NonFinite,

    #[error("empty polygon list")]
    EmptyPolygonList,

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("not uniform PSK: {0}")]
    NotUniformPsk(String),

    #[error("instance too large for brute force ({tuples} tuples, cap {cap})")]
    TooLarge { tuples: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
