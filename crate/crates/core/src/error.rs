use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("asymmetric adjacency: {0} lists {1} but {1} does not list {0}")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("outer face {0:?} is not a face of the embedding")]
    OuterNotAFace(Vec<usize>),
    #[error("embedding violates Euler's formula: n={n}, m={m}, f={f}")]
    NotPlanar { n: usize, m: usize, f: usize },
    #[error("cycle {0:?} does not bound a face")]
    NotAFace(Vec<usize>),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("graph is not a plane triangulation")]
    NotTriangulation,
    #[error("graph has a bridge {0}-{1}; no strong orientation exists")]
    Bridge(usize, usize),
    #[error("budget exceeded: size {edges} > {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
    #[error("orientation does not match the graph: {0}")]
    OrientationMismatch(String),
    #[error("orientation is not strongly connected")]
    NotStrong,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal check failed: {0}")]
    Internal(String),
}
