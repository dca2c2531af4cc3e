use thiserror::Error;

use crate::family::AxiomViolation;
use crate::vertex::{VertexId, VertexSet};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {0} is listed in both K and I")]
    OverlappingPartition(VertexId),
    #[error("vertex {0} is listed more than once")]
    DuplicateVertex(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("illegal edge {0}-{1}: only K-I edges may be listed")]
    IllegalEdge(VertexId, VertexId),
    #[error("edge {0}-{1} is listed more than once")]
    DuplicateEdge(VertexId, VertexId),
    #[error("set {0} is not feasible")]
    NotFeasible(VertexSet),
    #[error("element set {0} is not feasible in the reduction")]
    NotFeasibleReduction(String),
    #[error("vertex {0} is not in the independent side I")]
    NotIndependentVertex(VertexId),
    #[error("ground set of size {size} exceeds the brute-force limit {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("forced vertex {0} is not an element of the poset")]
    ForcedNotClosed(VertexId),
    #[error("weight of vertex {0} is not a finite number")]
    InvalidWeight(VertexId),
    #[error("invalid flow network: {0}")]
    InvalidNetwork(String),
    #[error("invalid relation {0} < {1}: the order must be irreflexive with height at most two")]
    InvalidRelation(VertexId, VertexId),
    #[error("graph is not normalized: vertex {0} in I is adjacent to all of K")]
    NormalizationRequired(VertexId),
    #[error("family is not an antimatroid: {0}")]
    NotAnAntimatroid(AxiomViolation),
    #[error("not a split-graph shelling antimatroid: {0}")]
    NotSplitShelling(String),
    #[error("family is the full power set; several split graphs realize it")]
    FullPowerSet,
    #[error("delta must lie strictly between 0 and 1, got {0}")]
    InvalidDelta(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
