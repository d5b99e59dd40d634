use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("path is not transverse to the cut system: {0}")]
    NonTransverse(String),
    #[error("word is not realizable as an embedded arc: {0}")]
    Unrealizable(String),
    #[error("invalid cell ({0},{1})")]
    InvalidCell(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
