use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),

    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },

    #[error("edge {edge} out of range (graph has {edge_count} edges)")]
    EdgeOutOfRange { edge: EdgeId, edge_count: usize },

    #[error("coloring has {coloring} entries but the graph has {edges} edges")]
    ColoringLength { coloring: usize, edges: usize },

    #[error("color {color} outside palette of size {palette}")]
    ColorOutOfPalette { color: usize, palette: usize },

    #[error("source and target must be distinct vertices (got {0} twice)")]
    SameVertex(VertexId),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph must have at least {0} vertices")]
    TooFewVertices(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: VertexId, degree: usize },

    #[error("graph is not 3-edge-connected (edge connectivity {0})")]
    NotThreeEdgeConnected(usize),

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("invalid cut certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("coloring is not a rainbow disconnection coloring (no rainbow cut for {s}-{t})")]
    NotRainbowDisconnected { s: VertexId, t: VertexId },

    #[error("coloring uses {used} colors, expected at most {allowed}")]
    TooManyColors { used: usize, allowed: usize },

    #[error("invalid formula: {0}")]
    InvalidFormula(String),

    #[error("assignment does not satisfy the formula")]
    UnsatisfyingAssignment,

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
