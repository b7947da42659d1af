//! Exact dynamics of Heisenberg-coupled spin-1/2 ensembles and the two-spin
//! entanglement analysis built on top of it.
//!
//! The crate is layered bottom-up:
//!
//! - [`qcore`]: dense complex matrices, kets, Pauli embeddings, Hermitian
//!   eigendecomposition, spectral time evolution and pair partial traces.
//! - [`entanglement`]: X-state algebra, the partial-transpose separability
//!   test, Wootters concurrence and the covariance identities that tie the
//!   concurrence of an X state to two measurable spin-spin covariances.
//! - [`spinstar`]: the generalized spin-star model (two central spins coupled
//!   to a bath of `N` spins by XY exchange), its reduced four-state dynamics,
//!   closed-form solutions and a brute-force full Hilbert space oracle.
//!
//! The guide in `book/` walks through each layer; its code listings are
//! compiled and run as doc-tests of this crate.

pub mod entanglement;
mod error;
pub mod qcore;
pub mod spinstar;

pub use error::{Error, Result};

/// `cargo test --doc` runs every listing of the guide through this module.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/linear_algebra.md")]
    pub mod linear_algebra {}
    #[doc = include_str!("../../../book/src/x_states.md")]
    pub mod x_states {}
    #[doc = include_str!("../../../book/src/covariances.md")]
    pub mod covariances {}
    #[doc = include_str!("../../../book/src/spin_star.md")]
    pub mod spin_star {}
    #[doc = include_str!("../../../book/src/sectors.md")]
    pub mod sectors {}
    #[doc = include_str!("../../../book/src/second_preparation.md")]
    pub mod second_preparation {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub mod oracle {}
    #[doc = include_str!("../../../book/src/figures.md")]
    pub mod figures {}
}
