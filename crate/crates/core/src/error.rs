use thiserror::Error;

use crate::graph::ExceptionKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("clique order k must be at least 1 (got {0})")]
    InvalidK(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has {n} vertices, above the exhaustive-search cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("enumeration of {n}-vertex graphs refused: cap is {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is exceptional for this k: {0}")]
    Exceptional(ExceptionKind),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}
