use thiserror::Error;

/// Which product-projector range was empty when building an EPR-like state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EprSide {
    /// The range of `P_a (1 - P_b)`, i.e. outcome (yes, no).
    YesNo,
    /// The range of `(1 - P_a) P_b`, i.e. outcome (no, yes).
    NoYes,
}

impl std::fmt::Display for EprSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EprSide::YesNo => f.write_str("P_a(1-P_b)"),
            EprSide::NoYes => f.write_str("(1-P_a)P_b"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite entry at index {0}")]
    NonFinite(usize),

    #[error("invalid projector: {0}")]
    InvalidProjector(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("state vector is not normalized (norm {0})")]
    NotUnit(f64),

    #[error("cannot normalize the zero vector")]
    ZeroVector,

    #[error("propositions are not compatible: commutator norm {0:e}")]
    Incompatible(f64),

    #[error("eigenvalues must be pairwise distinct")]
    DegenerateEigenvalues,

    #[error("no EPR-like state: range of {0} is the zero subspace")]
    NoEprState(EprSide),

    #[error("matrix file: {0}")]
    MatrixFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
