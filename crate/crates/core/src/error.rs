use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("hyperedge {edge}: vertex {vertex} out of range 1..={n_vertices}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n_vertices: usize,
    },
    #[error("{what} must be positive")]
    NonPositiveWeight { what: String },
    #[error("expected {expected} {what}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("hypergraph must have at least one vertex")]
    NoVertices,
    #[error("part index {index} out of range (ensemble has {parts} parts)")]
    PartIndex { index: usize, parts: usize },
    #[error("vertex {vertex} appears in more than one part")]
    OverlappingParts { vertex: usize },
    #[error("vertex {vertex} is not assigned to any part")]
    UnassignedVertex { vertex: usize },
    #[error("balance factor must lie strictly between 0 and 1")]
    InvalidDelta,
    #[error("partition ensemble has no parts")]
    EmptyEnsemble,
    #[error("cannot split {n_vertices} vertices into {n_parts} parts")]
    InvalidPartCount { n_parts: usize, n_vertices: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("hypergraph has no hyperedges, so no phase-space boundary can be derived")]
    NoBoundary,
    #[error("wavefunction norm is {norm}, expected 1")]
    NotNormalized { norm: f64 },
    #[error("density matrix is not Hermitian (deviation {deviation})")]
    NotHermitian { deviation: f64 },
    #[error("density matrix trace times cell width is {trace}, expected 1")]
    BadTrace { trace: f64 },
    #[error("density matrix is not positive semidefinite")]
    NotPositive,
    #[error("time step must be finite")]
    NonFiniteStep,
    #[error("step count must be at least 1")]
    NoSteps,
    #[error("slice index {index} out of range ({len} slices)")]
    SliceIndex { index: usize, len: usize },
    #[error("qubit count {0} outside 1..=20")]
    QubitCount(usize),
    #[error("qubit {qubit} out of range for a {n_qubits}-qubit state")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("truth table has {got} entries, expected 2^{n}")]
    TruthTableLength { n: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
