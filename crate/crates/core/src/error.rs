use thiserror::Error;

/// Errors raised by the linear-algebra, entanglement and spin-star layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("site {site} out of range for {num_spins} spins")]
    SiteOutOfRange { site: usize, num_spins: usize },

    #[error("pair sites must be distinct (both are {0})")]
    SiteCollision(usize),

    /// Dense storage is capped; see [`crate::qcore::MAX_DENSE_DIM`].
    #[error("dense dimension {dim} exceeds the cap of {cap}")]
    DenseCapExceeded { dim: usize, cap: usize },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("state is not normalized (norm {0})")]
    Unnormalized(f64),

    #[error("eigendecomposition did not converge")]
    NoConvergence,

    #[error("two-qubit density matrix is not in X form (off-X residue {0:e})")]
    NotXForm(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid coupled-basis label: {0}")]
    InvalidLabel(String),

    #[error("argument out of domain: {0}")]
    OutOfDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
