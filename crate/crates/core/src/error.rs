use thiserror::Error;

use crate::digraph::{ArcId, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop arc at vertex {0}")]
    Loop(Vertex),
    #[error("no arc instance with id {0}")]
    MissingArc(ArcId),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TerminalError {
    #[error("terminal set needs at least 2 vertices, got {0}")]
    TooSmall(usize),
    #[error("terminal {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: Vertex, n: usize },
    #[error("terminal {0} listed twice")]
    Duplicate(Vertex),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlowError {
    #[error("flow vector has {got} entries, digraph has {expected} arcs")]
    LengthMismatch { expected: usize, got: usize },
    #[error("flow conservation violated at vertex {0}")]
    Conservation(Vertex),
    #[error("source {0} has more inflow than outflow")]
    SourceAbsorbs(Vertex),
    #[error("sink {0} has more outflow than inflow")]
    SinkEmits(Vertex),
    #[error("vertex {0} is both a source and a sink")]
    SourceIsSink(Vertex),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PackingError {
    #[error("k = {k} outside 2..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("digraph is not symmetric")]
    NotSymmetric,
    #[error("{0} is not a cycle of the digraph")]
    NotACycle(String),
    #[error(transparent)]
    Terminal(#[from] TerminalError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("k = {k} outside 2..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("no hardcoded packing for n = {0}; only 4 and 6 are covered")]
    UnsupportedOrder(usize),
    #[error(transparent)]
    Terminal(#[from] TerminalError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("linkage terminals must be distinct vertices of the input")]
    TerminalsNotDistinct,
    #[error("terminal {vertex} out of range for {n} vertices")]
    TerminalOutOfRange { vertex: Vertex, n: usize },
    #[error("k = {k} too small, need at least {min}")]
    KTooSmall { k: usize, min: usize },
    #[error("demands must be at least 1, got ({0}, {1})")]
    InvalidDemands(usize, usize),
    #[error("ell must be at least 1")]
    InvalidEll,
    #[error("input graph needs at least 2 vertices")]
    TooFewVertices,
    #[error("input digraph has parallel arcs")]
    InputNotSimple,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}
