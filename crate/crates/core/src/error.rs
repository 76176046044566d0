use thiserror::Error;

use crate::graph::VertexId;
use crate::sptree::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tree: node {node} has {children} child(ren), joins need at least 2")]
    Arity { node: NodeId, children: usize },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}, column {column}: join has {found} operand(s), needs at least 2")]
    JoinArity {
        line: usize,
        column: usize,
        found: usize,
    },

    #[error("edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("graph has {vertices} vertices; the exact oracle is capped at {cap}")]
    Capacity { vertices: usize, cap: usize },

    #[error("enumeration budget exceeded: {requested} leaves requested, at most {max} supported")]
    Budget { requested: usize, max: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not series-parallel between the given terminals")]
    NotSeriesParallel,

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
