use thiserror::Error;

/// Errors shared by the simulation, pulse, compilation, verification,
/// and layout modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit {qubit} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("pulse endpoints must be distinct, got qubit {0} twice")]
    IdenticalQubits(usize),

    #[error("qubit indices must be pairwise distinct")]
    NonDistinctQubits,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("{num_qubits} qubits exceed the dense cap of {cap}")]
    RegisterTooLarge { num_qubits: usize, cap: usize },

    #[error("excitation count {excitation} out of range for {num_qubits} qubits")]
    ExcitationOutOfRange { excitation: usize, num_qubits: usize },

    #[error("matrix is not unitary (defect {defect:.3e})")]
    NotUnitary { defect: f64 },

    #[error("matrix is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("blocks overlap on at least one physical qubit")]
    OverlappingBlocks,

    #[error("block has no third qubit but the operation requires one")]
    MissingThirdQubit,

    #[error("state leaks outside the code space (weight {weight:.3e})")]
    CodeSpaceLeakage { weight: f64 },

    #[error("non-finite amplitude or angle")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
