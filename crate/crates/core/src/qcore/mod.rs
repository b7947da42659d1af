//! Dense complex linear algebra and quantum-state primitives.
//!
//! Everything here works on the full `2^n` product space and is capped at
//! [`MAX_DENSE_DIM`]. Time evolution is spectral: the Hamiltonians of interest
//! are time independent, so `exp(-iHt)` is formed from one Hermitian
//! eigendecomposition and reused for every time point.

mod eigen;
mod matrix;
mod spin;
mod trace;

pub use eigen::{evolve, hermitian_eigen, HermitianEigenDecomposition, Propagator, HERMITIAN_TOL};
pub use matrix::{ComplexMatrix, StateVector};
pub use num_complex::Complex64 as ComplexScalar;
pub use spin::{
    add_exchange, collective_spin_squared, dense_dim, embed_single_site, pauli, total_sigma_z, Axis, Spin,
    SpinBasisIndex,
};
pub use trace::{density_from_ket, pair_density_from_ket, partial_trace_to_pair, NORM_TOL};

/// Largest dense Hilbert-space dimension (12 spins).
pub const MAX_DENSE_DIM: usize = 4096;
