use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} is {got}, limit is {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("edge {edge}: vertex {vertex} out of range (k = {k})")]
    VertexOutOfRange { edge: usize, vertex: usize, k: usize },
    #[error("edge {edge}: vertex {vertex} repeated")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("couplings must be uniform and positive")]
    NonUniformCoupling,
    #[error("probability {0} out of range")]
    ProbabilityOutOfRange(f64),
    #[error("invalid value: {0}")]
    InvalidValue(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("faces of the {lx}x{ly} honeycomb torus admit no proper 3-coloring")]
    NotThreeColorable { lx: usize, ly: usize },
}

impl Error {
    /// Short stable tag used in machine-readable CLI messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Capacity { .. } => "capacity",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::EmptyEdge(_)
            | Error::VertexOutOfRange { .. }
            | Error::RepeatedVertex { .. } => "validation",
            Error::IsolatedVertex(_) => "isolated-vertex",
            Error::NonUniformCoupling => "non-uniform-coupling",
            Error::ProbabilityOutOfRange(_) => "probability-range",
            Error::InvalidValue(_) => "invalid-value",
            Error::InvalidGraph(_) => "invalid-graph",
            Error::NotThreeColorable { .. } => "not-three-colorable",
        }
    }

    pub(crate) fn capacity(what: &'static str, got: usize, limit: usize) -> Self {
        Error::Capacity { what, got, limit }
    }
}
