use num_complex::Complex64 as C64;

use super::{TwoQubitDensity, XStateDensity};
use crate::qcore::{hermitian_eigen, pauli, Axis, ComplexMatrix};
use crate::Result;

/// Slack on the separability test `|c| <= sqrt(a e)`; equality is separable.
pub const SEPARABILITY_SLACK: f64 = 1e-12;

/// Negative spin-flip eigenvalues down to this magnitude are rounding noise.
pub const EIGEN_CLIP: f64 = 1e-12;

/// Transpose over the second qubit: `ρ^{T_B}_{(i,j),(k,l)} = ρ_{(i,l),(k,j)}`.
///
/// The result is Hermitian with unit trace but need not be positive.
pub fn partial_transpose(rho: &ComplexMatrix) -> ComplexMatrix {
    assert!(rho.rows() == 4 && rho.cols() == 4, "partial transpose needs a 4x4 matrix");
    ComplexMatrix::from_fn(4, 4, |row, col| {
        let (i, j) = (row / 2, row % 2);
        let (k, l) = (col / 2, col % 2);
        rho[(2 * i + l, 2 * k + j)]
    })
}

/// Peres–Horodecki verdict for an X state, which reduces to
/// `|c| <= sqrt(a e)`.
pub fn is_separable(x: &XStateDensity) -> bool {
    x.c().norm() <= (x.a() * x.e()).sqrt() + SEPARABILITY_SLACK
}

/// `max{0, 2(|c| - sqrt(a e))}`.
pub fn concurrence_x(x: &XStateDensity) -> f64 {
    (2.0 * (x.c().norm() - (x.a() * x.e()).sqrt())).max(0.0)
}

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The spin-flip eigenvalues of `ρ (σy⊗σy) ρ* (σy⊗σy)` coincide with those of
/// the Hermitian `√ρ ρ̃ √ρ`, which is what gets diagonalized.
pub fn concurrence_wootters(rho: &TwoQubitDensity) -> Result<f64> {
    let m = rho.matrix();
    let yy = pauli(Axis::Y).kron(&pauli(Axis::Y));
    let flipped = &(&yy * &m.conj()) * &yy;

    let sqrt_rho = hermitian_eigen(&hermitize(m))?.map_spectrum(|l| l.max(0.0).sqrt());
    let r = &(&sqrt_rho * &flipped) * &sqrt_rho;
    let eig = hermitian_eigen(&hermitize(&r))?;

    let mut lambdas: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&l| if (-EIGEN_CLIP..0.0).contains(&l) { 0.0 } else { l.max(0.0) })
        .map(f64::sqrt)
        .collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    Ok((lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).max(0.0))
}

fn hermitize(m: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(m.rows(), m.cols(), |i, j| C64::new(0.5, 0.0) * (m[(i, j)] + m[(j, i)].conj()))
}
