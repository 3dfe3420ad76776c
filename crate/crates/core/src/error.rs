use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank n = {0} is not supported (need n >= 2)")]
    InvalidRank(i64),

    #[error("index {index} out of range for node set {{0..{n}}}")]
    IndexOutOfRange { index: i64, n: usize },

    #[error("column depths {0:?} violate y_l <= y_(l+1): depths must be positive and weakly decreasing")]
    NotMonotone(Vec<i64>),

    #[error("cannot add a box to column {column}: the result is not a Young diagram")]
    CannotAdd { column: usize },

    #[error("cannot remove a box from column {column}: the result is not a Young diagram")]
    CannotRemove { column: usize },

    #[error("combination mixes diagrams from different Fock spaces (n={0}, charge={1} vs n={2}, charge={3})")]
    MixedSpace(usize, usize, usize, usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal error: inexact Laurent polynomial division")]
    InexactDivision,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
