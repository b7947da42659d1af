use num_complex::Complex64 as C64;

use super::{dense_dim, ComplexMatrix, StateVector};
use crate::{Error, Result};

/// Largest tolerated deviation of `<psi|psi>` from one in [`density_from_ket`].
pub const NORM_TOL: f64 = 1e-8;

/// `|psi><psi|`.
pub fn density_from_ket(psi: &StateVector) -> Result<ComplexMatrix> {
    let norm = psi.norm();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::Unnormalized(norm));
    }
    let a = psi.amplitudes();
    Ok(ComplexMatrix::from_fn(a.len(), a.len(), |i, j| a[i] * a[j].conj()))
}

fn check_pair(site_i: usize, site_j: usize, num_spins: usize) -> Result<usize> {
    for site in [site_i, site_j] {
        if site >= num_spins {
            return Err(Error::SiteOutOfRange { site, num_spins });
        }
    }
    if site_i == site_j {
        return Err(Error::SiteCollision(site_i));
    }
    dense_dim(num_spins)
}

/// Two-spin index in the order `(|+1,+1>, |+1,-1>, |-1,+1>, |-1,-1>)`.
#[inline]
fn pair_index(s: usize, site_i: usize, site_j: usize) -> usize {
    2 * (1 - (s >> site_i & 1)) + (1 - (s >> site_j & 1))
}

/// Global index with the pair bits of `s` replaced by pair configuration `p`.
#[inline]
fn with_pair(s: usize, p: usize, site_i: usize, site_j: usize) -> usize {
    let rest = s & !((1 << site_i) | (1 << site_j));
    let bi = 1 - (p >> 1);
    let bj = 1 - (p & 1);
    rest | (bi << site_i) | (bj << site_j)
}

/// Reduced 4x4 density matrix of the pair `(site_i, site_j)`, traced over all
/// other spins, in the ordered basis `(|+1,+1>, |+1,-1>, |-1,+1>, |-1,-1>)`.
pub fn partial_trace_to_pair(
    rho: &ComplexMatrix,
    site_i: usize,
    site_j: usize,
    num_spins: usize,
) -> Result<ComplexMatrix> {
    let dim = check_pair(site_i, site_j, num_spins)?;
    if rho.rows() != dim || rho.cols() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: rho.rows() });
    }
    let mut out = ComplexMatrix::zeros(4, 4);
    for r in 0..dim {
        let p = pair_index(r, site_i, site_j);
        for q in 0..4 {
            out[(p, q)] += rho[(r, with_pair(r, q, site_i, site_j))];
        }
    }
    Ok(out)
}

/// Same as `partial_trace_to_pair(density_from_ket(psi))`, without forming
/// the full density matrix.
pub fn pair_density_from_ket(
    psi: &StateVector,
    site_i: usize,
    site_j: usize,
    num_spins: usize,
) -> Result<ComplexMatrix> {
    let dim = check_pair(site_i, site_j, num_spins)?;
    if psi.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: psi.dim() });
    }
    let a = psi.amplitudes();
    let mut out = ComplexMatrix::zeros(4, 4);
    for r in 0..dim {
        if a[r] == C64::new(0.0, 0.0) {
            continue;
        }
        let p = pair_index(r, site_i, site_j);
        for q in 0..4 {
            out[(p, q)] += a[r] * a[with_pair(r, q, site_i, site_j)].conj();
        }
    }
    Ok(out)
}
