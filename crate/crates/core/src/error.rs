use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible Dynkin type: {0}")]
    InvalidDynkin(String),

    #[error("node {node} is out of range for rank {rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("node {node} is not minuscule for {dynkin} (minuscule nodes: {allowed:?})")]
    NotMinuscule {
        dynkin: String,
        node: usize,
        allowed: Vec<usize>,
    },

    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i32>),

    #[error("quiver has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("not an order ideal: vertex {lower} lies below member {upper} but is missing")]
    NotAnIdeal { lower: usize, upper: usize },

    #[error("vertex {0} is not a member of the ideal")]
    VertexNotInIdeal(usize),

    #[error("vertex {0} is out of range for the ambient quiver")]
    VertexOutOfRange(usize),

    #[error("vertex set {small} is not contained in {big}")]
    NotASubset { small: String, big: String },

    #[error("hole at vertex {0} is not essential")]
    NotEssential(usize),

    #[error("node {0} is both a peak color and a hole color")]
    PeakAndHoleColor(usize),

    #[error("offset reconstruction gave {got} instead of {expected}")]
    ReconstructionMismatch { expected: String, got: String },

    #[error("subvariety {small} is not stable in {big}")]
    NotStable { small: String, big: String },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("partition {partition} does not fit in a {rows}x{cols} box")]
    PartitionOverflow {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("permutation {0:?} is not Grassmannian with descent at {1}")]
    NotGrassmannian(Vec<usize>, usize),

    #[error("operation requires a type A space, got {0}")]
    NotTypeA(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("construction check failed: {0}")]
    Construction(String),
}
