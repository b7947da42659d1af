//! Brute-force reference dynamics on the full `2^(N+2)` Hilbert space.
//!
//! Nothing here uses the sector structure: the full Hamiltonian is
//! diagonalized, the product initial state propagated, and the bath traced
//! out entry by entry. It is the independent check on both the sector engine
//! and the closed forms.

use num_complex::Complex64 as C64;

use super::{build_spin_star_hamiltonian, InitialState, SpinStarConfig, SITE_A, SITE_B};
use crate::entanglement::{matrix_to_x_state, TwoQubitDensity, XStateDensity};
use crate::qcore::{pair_density_from_ket, ComplexMatrix, Propagator, SpinBasisIndex, StateVector};
use crate::{Error, Result};

/// Largest bath the oracle accepts (register dimension 1024).
pub const ORACLE_MAX_BATH: usize = 8;

/// Full-space propagator for one spin-star configuration.
#[derive(Clone, Debug)]
pub struct Oracle {
    cfg: SpinStarConfig,
    hamiltonian: ComplexMatrix,
    propagator: Propagator,
}

impl Oracle {
    pub fn new(cfg: &SpinStarConfig) -> Result<Self> {
        check_cap(cfg)?;
        let h = build_spin_star_hamiltonian(cfg)?;
        Self::with_hamiltonian(cfg, h)
    }

    /// Uses a caller-supplied Hamiltonian on the register of `cfg`.
    pub fn with_hamiltonian(cfg: &SpinStarConfig, hamiltonian: ComplexMatrix) -> Result<Self> {
        check_cap(cfg)?;
        let dim = 1usize << cfg.num_spins();
        if hamiltonian.rows() != dim || hamiltonian.cols() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: hamiltonian.rows() });
        }
        let propagator = Propagator::new(&hamiltonian)?;
        Ok(Self { cfg: *cfg, hamiltonian, propagator })
    }

    pub fn config(&self) -> &SpinStarConfig {
        &self.cfg
    }

    pub fn hamiltonian(&self) -> &ComplexMatrix {
        &self.hamiltonian
    }

    pub fn initial_ket(&self, initial: &InitialState) -> Result<StateVector> {
        let spins = initial.spins(&self.cfg)?;
        let index = SpinBasisIndex::from_spins(&spins)?;
        Ok(StateVector::basis(1 << self.cfg.num_spins(), index.index()))
    }

    /// Prepares an initial state for repeated evaluation at many times.
    pub fn prepare(&self, initial: &InitialState) -> Result<OracleRun<'_>> {
        let psi0 = self.initial_ket(initial)?;
        let coords = self.propagator.to_eigenbasis(&psi0)?;
        Ok(OracleRun { oracle: self, psi0, coords })
    }

    /// Central-pair X state of a full-register ket.
    pub fn pair_state(&self, psi: &StateVector) -> Result<XStateDensity> {
        let rho = pair_density_from_ket(psi, SITE_A, SITE_B, self.cfg.num_spins())?;
        matrix_to_x_state(&TwoQubitDensity::new(rho)?)
    }

    /// Central-pair 4x4 reduced matrix of a full-register ket, not checked
    /// for X form.
    pub fn pair_matrix(&self, psi: &StateVector) -> Result<ComplexMatrix> {
        pair_density_from_ket(psi, SITE_A, SITE_B, self.cfg.num_spins())
    }

    /// `<psi| H |psi>`.
    pub fn energy(&self, psi: &StateVector) -> Result<f64> {
        Ok(self.hamiltonian.expectation(psi.amplitudes())?.re)
    }
}

/// An initial state expanded in the oracle eigenbasis.
#[derive(Clone, Debug)]
pub struct OracleRun<'a> {
    oracle: &'a Oracle,
    psi0: StateVector,
    coords: Vec<C64>,
}

impl OracleRun<'_> {
    /// Full-register ket at physical time `t`; exactly the initial ket at
    /// `t = 0`.
    pub fn ket_at(&self, t: f64) -> StateVector {
        if t == 0.0 {
            return self.psi0.clone();
        }
        self.oracle.propagator.from_eigenbasis(&self.coords, t)
    }

    pub fn pair_at(&self, t: f64) -> Result<XStateDensity> {
        self.oracle.pair_state(&self.ket_at(t))
    }
}

fn check_cap(cfg: &SpinStarConfig) -> Result<()> {
    if cfg.bath_size() > ORACLE_MAX_BATH {
        return Err(Error::DenseCapExceeded {
            dim: 1usize << cfg.num_spins().min(usize::BITS as usize - 1),
            cap: 1 << (ORACLE_MAX_BATH + 2),
        });
    }
    Ok(())
}

/// One-shot oracle evaluation of the central pair at physical time `t`.
pub fn oracle_evolve(cfg: &SpinStarConfig, initial: &InitialState, t: f64) -> Result<XStateDensity> {
    Oracle::new(cfg)?.prepare(initial)?.pair_at(t)
}
