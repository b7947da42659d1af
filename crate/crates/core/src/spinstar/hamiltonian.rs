use crate::qcore::{add_exchange, collective_spin_squared, dense_dim, total_sigma_z, ComplexMatrix};
use crate::{Error, Result};

use super::{SpinStarConfig, BATH_OFFSET, SITE_A, SITE_B};

/// Largest bath for which the full spin-star Hamiltonian is stored densely.
pub const MAX_DENSE_BATH: usize = 10;

/// `H = α_A (σx^A Σσx^i + σy^A Σσy^i) + α_B (σx^B Σσx^i + σy^B Σσy^i)` on
/// the `2^(N+2)` register ordered `(A, B, bath_1, …, bath_N)`.
pub fn build_spin_star_hamiltonian(cfg: &SpinStarConfig) -> Result<ComplexMatrix> {
    if cfg.bath_size() > MAX_DENSE_BATH {
        return Err(Error::DenseCapExceeded {
            dim: 1usize << cfg.num_spins().min(usize::BITS as usize - 1),
            cap: crate::qcore::MAX_DENSE_DIM,
        });
    }
    let n = cfg.num_spins();
    let dim = dense_dim(n)?;
    let mut h = ComplexMatrix::zeros(dim, dim);
    for bath in BATH_OFFSET..n {
        add_exchange(&mut h, SITE_A, bath, cfg.alpha_a(), 0.0, n)?;
        add_exchange(&mut h, SITE_B, bath, cfg.alpha_b(), 0.0, n)?;
    }
    Ok(h)
}

/// Isotropic exchange `Σ_{i<j} α_ij σ⃗_i·σ⃗_j` on `num_spins` spins. Only the
/// upper triangle of `couplings` is read; the diagonal is ignored.
pub fn build_general_heisenberg(num_spins: usize, couplings: &[Vec<f64>]) -> Result<ComplexMatrix> {
    if couplings.len() != num_spins || couplings.iter().any(|row| row.len() != num_spins) {
        return Err(Error::DimensionMismatch { expected: num_spins, found: couplings.len() });
    }
    let dim = dense_dim(num_spins)?;
    let mut h = ComplexMatrix::zeros(dim, dim);
    for i in 0..num_spins {
        for j in i + 1..num_spins {
            let alpha = couplings[i][j];
            if alpha != 0.0 {
                add_exchange(&mut h, i, j, alpha, alpha, num_spins)?;
            }
        }
    }
    Ok(h)
}

/// `Σ σz` over the whole register.
pub fn total_sz(cfg: &SpinStarConfig) -> Result<ComplexMatrix> {
    total_sigma_z(cfg.num_spins())
}

/// Squared collective bath spin `J²` with `J⃗ = Σ_bath σ⃗/2`.
pub fn bath_j_squared(cfg: &SpinStarConfig) -> Result<ComplexMatrix> {
    let sites: Vec<usize> = (BATH_OFFSET..cfg.num_spins()).collect();
    collective_spin_squared(&sites, cfg.num_spins())
}

/// Squared spin of an arbitrary subset of bath spins (zero-based bath indices).
pub fn bath_subset_j_squared(cfg: &SpinStarConfig, bath_spins: &[usize]) -> Result<ComplexMatrix> {
    let sites: Vec<usize> = bath_spins.iter().map(|&i| BATH_OFFSET + i).collect();
    collective_spin_squared(&sites, cfg.num_spins())
}
