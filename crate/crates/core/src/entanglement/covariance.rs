use num_complex::Complex64 as C64;

use super::{TwoQubitDensity, XStateDensity};
use crate::qcore::ComplexMatrix;
use crate::{Error, Result};

/// Imaginary residue tolerated before a covariance is cast to a real number.
pub const REAL_CAST_TOL: f64 = 1e-10;

const OBSERVABLE_TOL: f64 = 1e-12;

/// Reduced state of the first qubit.
pub fn marginal_first(rho: &TwoQubitDensity) -> ComplexMatrix {
    let m = rho.matrix();
    ComplexMatrix::from_fn(2, 2, |i, k| (0..2).map(|j| m[(2 * i + j, 2 * k + j)]).sum())
}

/// Reduced state of the second qubit.
pub fn marginal_second(rho: &TwoQubitDensity) -> ComplexMatrix {
    let m = rho.matrix();
    ComplexMatrix::from_fn(2, 2, |j, l| (0..2).map(|i| m[(2 * i + j, 2 * i + l)]).sum())
}

fn real_part(z: C64, what: &str) -> Result<f64> {
    if z.im.abs() > REAL_CAST_TOL {
        return Err(Error::InvalidDensity(format!("{what} has imaginary part {:e}", z.im)));
    }
    Ok(z.re)
}

fn check_observable(op: &ComplexMatrix) -> Result<()> {
    if op.rows() != 2 || op.cols() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: op.rows() });
    }
    let defect = op.hermiticity_defect();
    if defect > OBSERVABLE_TOL {
        return Err(Error::NotHermitian(defect));
    }
    Ok(())
}

/// `C_AB = Tr{ρ A⊗B} - Tr{ρ_A A} Tr{ρ_B B}` for local Hermitian observables.
pub fn covariance(rho: &TwoQubitDensity, op_a: &ComplexMatrix, op_b: &ComplexMatrix) -> Result<f64> {
    check_observable(op_a)?;
    check_observable(op_b)?;
    let joint = (rho.matrix() * &op_a.kron(op_b)).trace();
    let mean_a = (&marginal_first(rho) * op_a).trace();
    let mean_b = (&marginal_second(rho) * op_b).trace();
    real_part(joint - mean_a * mean_b, "covariance")
}

/// Spin-spin covariances of an X state, in closed form.
///
/// Both local means of `σx` and `σy` vanish on an X state, so each covariance
/// is a single correlator of the coherence: `C_xx = C_yy = 2 Re c` and
/// `C_xy = C(σx^A, σy^B) = 2 Im c`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CovariancePair {
    pub cov_xx: f64,
    pub cov_yy: f64,
    pub cov_xy: f64,
}

pub fn covariance_pair_x(x: &XStateDensity) -> CovariancePair {
    let c = x.c();
    CovariancePair { cov_xx: 2.0 * c.re, cov_yy: 2.0 * c.re, cov_xy: 2.0 * c.im }
}

/// Concurrence rebuilt from measurable quantities:
/// `max{0, sqrt(C_xx² + C_xy²) - 2 sqrt(a e)}`.
///
/// When `a e = 0` this is the bare covariance norm `2|c|`.
pub fn concurrence_from_covariances(x: &XStateDensity) -> f64 {
    let cov = covariance_pair_x(x);
    (cov.cov_xx.hypot(cov.cov_xy) - 2.0 * (x.a() * x.e()).sqrt()).max(0.0)
}
