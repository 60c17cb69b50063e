use thiserror::Error;

use crate::multigraph::{EdgeRef, Vertex};

/// Errors produced by graph, tree and parking-function operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("loop at vertex {0}")]
    Loop(Vertex),

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),

    #[error("edge {0} does not exist in the graph")]
    NoSuchEdge(EdgeRef),

    #[error("edge {0} is not a valid parent edge for its tail")]
    BadParentEdge(EdgeRef),

    #[error("parent edges form a cycle through vertex {0}")]
    Cycle(Vertex),

    #[error("tree does not span the graph")]
    NotSpanning,

    #[error("vertex {0} is not in the tree")]
    NotInTree(Vertex),

    #[error("table policy has no order for tree [{0}]")]
    MissingTableEntry(String),

    #[error("order policy defect: {0}")]
    PolicyDefect(String),

    #[error("not a parking function: nothing can be attached at step {step}, stuck set {stuck:?}")]
    NotParkingFunction { step: usize, stuck: Vec<Vertex> },

    #[error("graph is not symmetric")]
    NotSymmetric,

    #[error("parallel edges between {0} and {1} are not supported")]
    ParallelEdges(Vertex, Vertex),

    #[error("path cannot be extended past vertex {0}")]
    NoExtension(Vertex),

    #[error("malformed dyck path: {0}")]
    MalformedDyck(String),

    #[error("edge order: {0}")]
    EdgeOrder(String),

    #[error("sandpile configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
