use thiserror::Error;

/// Errors produced by graph construction, solvers and evaluation.
#[derive(Error, Debug)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix asymmetry {asymmetry:e} exceeds tolerance {tolerance:e}")]
    Asymmetric { asymmetry: f64, tolerance: f64 },

    #[error("matrix has non-finite entries")]
    NonFinite,

    #[error("matrix is empty")]
    EmptyMatrix,

    #[error("infinite-mean shape: Pareto shape must exceed 1, got {0}")]
    InfiniteMeanShape(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("node index {index} out of range for {n} nodes")]
    NodeOutOfRange { index: usize, n: usize },

    #[error("{path}:{line}: malformed line: {reason}")]
    ParseLine {
        path: String,
        line: usize,
        reason: String,
    },

    #[error("duplicate node id {id:?} at {path}:{line}")]
    DuplicateNodeId {
        path: String,
        line: usize,
        id: String,
    },

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("lambda undefined for edgeless graph")]
    EdgelessGraph,

    #[error("graph is disconnected; extract the largest connected component first")]
    Disconnected,

    #[error("objective became non-finite at iteration {iteration}")]
    NonFiniteObjective { iteration: usize },

    #[error("instance too large: C({n},{r}) exceeds the enumeration guard {guard}")]
    InstanceTooLarge { n: usize, r: usize, guard: u64 },

    #[error("label index {index} out of range for {r} clusters")]
    LabelOutOfRange { index: usize, r: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
