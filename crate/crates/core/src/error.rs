use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("index set must be strictly increasing: {0:?}")]
    UnsortedIndices(Vec<usize>),

    #[error("principal and complement submatrices need identical row and column sets")]
    MismatchedIndexSets,

    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("hook label ({arm}, 1^{legs}) is not a partition")]
    InvalidLabel { arm: i64, legs: i64 },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("cycle type has a zero part")]
    ZeroPart,

    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),

    #[error("interpolated coefficient {index} is not an integer: {value}")]
    NonIntegral { index: usize, value: String },

    #[error("invalid number {0:?}")]
    InvalidNumber(String),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation needs an undirected graph")]
    ExpectedUndirected,

    #[error("operation needs a directed graph")]
    ExpectedDirected,

    #[error("gamma must be nonzero")]
    ZeroGamma,

    #[error("unknown matrix kind {0:?}")]
    UnknownKind(String),

    #[error("malformed {format} input: {reason}")]
    Parse { format: &'static str, reason: String },

    #[error("matrix must be symmetric")]
    NotSymmetric,

    #[error("Theorem-4 decks are only defined for the adjacency matrix")]
    DeckKindUnsupported,

    #[error("m = n = {0}: the deletion identity does not determine the polynomial")]
    EqualCounts(usize),

    #[error("inconsistent deck: {0}")]
    InconsistentDeck(String),

    #[error("sign convention undecided: {0}")]
    Indecisive(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
