use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input contains no edges")]
    EmptyInput,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("{count} vertices do not fit the {bits}-bit vertex index type")]
    IndexOverflow { count: u128, bits: u32 },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: u64, n: usize },

    #[error("graph is not connected: BFS from {from} reached {reached} of {n} vertices")]
    Disconnected { from: u64, reached: usize, n: usize },

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("graph has {n} vertices, above the exact-diameter limit of {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),

    #[error("invalid stopping criterion: {0}")]
    InvalidCriterion(String),

    #[error("invalid engine options: {0}")]
    InvalidOptions(String),

    #[error("run report has no records")]
    EmptyReport,

    #[error("record file line {line}: {message}")]
    RecordFormat { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
