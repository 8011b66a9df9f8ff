//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    InvalidVertexCount,
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("labeling is not a permutation")]
    NotAPermutation,
    #[error("empty input")]
    EmptyInput,
    #[error("bad graph JSON: {0}")]
    Json(String),
    #[error("bad edge-list header (expected `n <count>`): {0}")]
    BadHeader(String),
    #[error("bad edge line (expected `i j`): {0}")]
    BadEdgeLine(String),
    #[error("graph has {0} vertices, above the cap {1}")]
    CapExceeded(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error("resource cap exceeded during Groebner computation: {0}")]
    ResourceCap(String),
    #[error("order is not an elimination order for the dropped variables")]
    NotEliminationOrder,
    #[error("ring has {ring_vars} variables but the pair needs {needed}")]
    RingSizeMismatch { ring_vars: usize, needed: usize },
    #[error("colon by zero polynomial")]
    ColonByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BarError {
    #[error("bar space at ({i},{j}) has dimension {dim}, above the cap {cap}")]
    DimCapExceeded { i: usize, j: usize, dim: usize, cap: usize },
    #[error("bar homology needs a monomial or pure-difference binomial basis; offending element index {0}")]
    UnsupportedBasis(usize),
    #[error(transparent)]
    Gb(#[from] GbError),
}
