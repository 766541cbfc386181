use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("{what}: graph has {n} vertices, limit is {limit}")]
    SizeGuard {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("five-vertex count at index {0} is required but was not provided")]
    MissingFiveIndex(usize),

    #[error("formula for N{index} produced negative value {value}")]
    NegativeCount { index: usize, value: i128 },

    #[error("five-counts file, line {line}: {msg}")]
    FiveCountsFormat { line: usize, msg: String },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("pattern: {0}")]
    Pattern(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}
