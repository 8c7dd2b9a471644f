use alloc::string::String;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -> `{1}`")]
    DuplicateEdge(String, String),
    #[error("invalid weight {0}: weights must be finite and > 0")]
    BadWeight(f64),
    #[error("no edge {0} -> {1}")]
    MissingEdge(VertexId, VertexId),
    #[error("a path needs at least two vertices")]
    PathTooShort,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown vertex `{0}`")]
    UnknownVertexName(String),
    #[error("source and target are the same vertex")]
    SourceEqualsTarget,
    #[error("target-directed run needs a target vertex")]
    MissingTarget,
    #[error("graph has {0} vertices, oracle bound is {1}")]
    GraphTooLarge(usize, usize),
    #[error("invalid weight range [{0}, {1}]")]
    BadWeightRange(f64, f64),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("random graph needs at least one vertex")]
    EmptyRandomGraph,
}
