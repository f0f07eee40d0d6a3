use thiserror::Error;

use crate::complex::CellKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lattice size {size} on axis {axis} is degenerate (need at least 2)")]
    DegenerateLattice { axis: usize, size: usize },

    #[error("unsupported dimension {0} (only 2 and 3 are supported)")]
    UnsupportedDimension(usize),

    #[error("expected {expected} axis sizes, got {got}")]
    SizeCountMismatch { expected: usize, got: usize },

    #[error("unknown {kind:?} {index} (lattice has {count})")]
    UnknownCell {
        kind: CellKind,
        index: usize,
        count: usize,
    },

    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    IndexOutOfRange { index: usize, n_qubits: usize },

    #[error("operand sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a path: {0}")]
    NotAPath(String),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("operator is not closed: {violated} stabilizers violated")]
    OpenPath { violated: usize },

    #[error("move changes the excitation count from {before} to {after}")]
    EnergyNotConserved { before: usize, after: usize },

    #[error("{n_qubits} qubits exceed the dense cap of {cap}")]
    TooLarge { n_qubits: usize, cap: usize },

    #[error("invalid plane: {0}")]
    InvalidPlane(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
