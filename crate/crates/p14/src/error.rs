use thiserror::Error;

/// Errors shared across the algebra, irreps and evolution modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range 0..{dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("rotation generator requires mu < nu, got ({mu}, {nu})")]
    InvalidRotationPair { mu: usize, nu: usize },

    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("realization is missing generator {0}")]
    MissingGenerator(String),

    #[error("momentum components must be finite")]
    NonFiniteMomentum,

    #[error("spin must be a nonnegative half-integer, got {0}")]
    InvalidSpin(f64),

    #[error("Casimir operator is not a scalar matrix: reducible input")]
    ReducibleInput,

    #[error("blocks do not satisfy the required bracket relations (residual {residual:.3e})")]
    BracketClosure { residual: f64 },

    #[error("invalid class III label: {reason}")]
    InvalidLabel { reason: String },

    #[error("class IV carries no invariant wave equation")]
    UnsupportedEquation,

    #[error("axis point count must be a power of two >= 2, got {0}")]
    BadPointCount(usize),

    #[error("axis extent must be positive and finite, got {0}")]
    BadExtent(f64),

    #[error("grid must have between 1 and 3 spatial axes, got {0}")]
    BadAxisCount(usize),

    #[error("operation requires the {expected:?} representation")]
    WrongRepresentation { expected: crate::evolution::Representation },

    #[error("evanescent modes present under the reject policy (probability {removed:.6e})")]
    EvanescentModes { removed: f64 },

    #[error("state has zero norm")]
    ZeroNorm,

    #[error("amplitudes must be finite")]
    NonFiniteAmplitude,

    #[error("invalid mass bins: {0}")]
    InvalidBins(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("state file error: {0}")]
    StateFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
