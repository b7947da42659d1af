use faer::{Mat, Side};
use num_complex::Complex64 as C64;

use super::{ComplexMatrix, StateVector};
use crate::{Error, Result};

/// Hermiticity tolerance accepted by [`hermitian_eigen`].
pub const HERMITIAN_TOL: f64 = 1e-12;

/// `H = V diag(λ) V†` with ascending `λ` and orthonormal columns of `V`.
#[derive(Clone, Debug)]
pub struct HermitianEigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.dim();
        let v = &self.eigenvectors;
        ComplexMatrix::from_fn(n, n, |i, j| (0..n).map(|k| v[(i, k)] * self.eigenvalues[k] * v[(j, k)].conj()).sum())
    }

    /// `f(H) = V diag(f(λ)) V†` for a real function of the spectrum.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let mapped = Self {
            eigenvalues: self.eigenvalues.iter().map(|&l| f(l)).collect(),
            eigenvectors: self.eigenvectors.clone(),
        };
        mapped.reconstruct()
    }
}

pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigenDecomposition> {
    let n = h.ensure_square()?;
    let defect = h.hermiticity_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let m = Mat::<C64>::from_fn(n, n, |i, j| h[(i, j)]);
    let evd = m.self_adjoint_eigen(Side::Lower).map_err(|_| Error::NoConvergence)?;
    let s = evd.S().column_vector();
    let u = evd.U();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| s[a].re.total_cmp(&s[b].re));
    let eigenvalues = order.iter().map(|&k| s[k].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| u[(i, order[j])]);
    Ok(HermitianEigenDecomposition { eigenvalues, eigenvectors })
}

/// Spectral propagator `exp(-i H t)` for a fixed Hamiltonian.
///
/// The decomposition is done once; each call to [`Propagator::evolve`] costs
/// two dense matrix-vector products.
#[derive(Clone, Debug)]
pub struct Propagator {
    eigen: HermitianEigenDecomposition,
}

impl Propagator {
    pub fn new(h: &ComplexMatrix) -> Result<Self> {
        Ok(Self { eigen: hermitian_eigen(h)? })
    }

    pub fn from_eigen(eigen: HermitianEigenDecomposition) -> Self {
        Self { eigen }
    }

    pub fn eigen(&self) -> &HermitianEigenDecomposition {
        &self.eigen
    }

    pub fn dim(&self) -> usize {
        self.eigen.dim()
    }

    /// Coordinates of `psi` in the eigenbasis, `V† psi`.
    pub fn to_eigenbasis(&self, psi: &StateVector) -> Result<Vec<C64>> {
        let n = self.dim();
        if psi.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: psi.dim() });
        }
        let v = &self.eigen.eigenvectors;
        let amps = psi.amplitudes();
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (i, &a) in amps.iter().enumerate() {
            if a == C64::new(0.0, 0.0) {
                continue;
            }
            for (o, vik) in out.iter_mut().zip(v.row(i)) {
                *o += vik.conj() * a;
            }
        }
        Ok(out)
    }

    /// `V diag(exp(-i λ t)) coords`.
    pub fn from_eigenbasis(&self, coords: &[C64], t: f64) -> StateVector {
        let v = &self.eigen.eigenvectors;
        let phased: Vec<C64> =
            coords.iter().zip(&self.eigen.eigenvalues).map(|(&c, &l)| c * C64::from_polar(1.0, -l * t)).collect();
        let amps = (0..self.dim()).map(|i| v.row(i).iter().zip(&phased).map(|(a, b)| a * b).sum()).collect();
        StateVector::new(amps)
    }

    pub fn evolve(&self, psi: &StateVector, t: f64) -> Result<StateVector> {
        if !t.is_finite() {
            return Err(Error::OutOfDomain(format!("time must be finite, got {t}")));
        }
        if t == 0.0 {
            if psi.dim() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: psi.dim() });
            }
            return Ok(psi.clone());
        }
        let coords = self.to_eigenbasis(psi)?;
        Ok(self.from_eigenbasis(&coords, t))
    }
}

/// `exp(-i H t) |psi>` by full eigendecomposition of `H`.
pub fn evolve(h: &ComplexMatrix, psi: &StateVector, t: f64) -> Result<StateVector> {
    let n = h.ensure_square()?;
    if psi.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: psi.dim() });
    }
    Propagator::new(h)?.evolve(psi, t)
}
