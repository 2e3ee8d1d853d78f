use thiserror::Error;

use crate::complex::Simplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected vectors of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("simplex {0:?} has repeated vertices")]
    RepeatedVertex(Vec<usize>),
    #[error("empty simplex")]
    EmptySimplex,
    #[error("unknown stratum id {0}")]
    UnknownStratum(u32),
    #[error("duplicate stratum id {0}")]
    DuplicateStratum(u32),
    #[error("no top stratum of complex dimension {0}")]
    MissingTopStratum(usize),
    #[error("assignment for {0} which is not a simplex of the complex")]
    UnknownSimplex(Simplex),
    #[error("simplex {0} assigned twice")]
    DuplicateAssignment(Simplex),
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("subcomplex is not full: {0} has all vertices in it but is missing")]
    NotFull(Simplex),
    #[error("complex failed validation: {0}")]
    Invalid(String),
    #[error("identified vertices {0} and {1} are at distance {2}, need at least 3")]
    IdentificationTooClose(usize, usize, usize),
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header `{0}`")]
    MissingHeader(&'static str),
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("edge ({0}, {1}) is not an edge of the complex")]
    UnknownEdge(usize, usize),
    #[error("cocycle condition fails on triangle {0}: sum is {1}")]
    NotClosed(Simplex, i64),
    #[error("cocycle is not surjective onto Z (image is {0}Z)")]
    NotSurjective(u64),
    #[error("spanning tree edge ({0}, {1}) is not an edge of the complex")]
    BadTree(usize, usize),
    #[error("spanning tree does not reach vertex {0}")]
    TreeNotSpanning(usize),
    #[error("cover window too small for lift of {0}")]
    WindowTooSmall(Simplex),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("bad catalog parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
