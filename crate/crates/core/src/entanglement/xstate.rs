use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::qcore::{hermitian_eigen, ComplexMatrix};
use crate::{Error, Result};

/// Tolerance for population, trace and positivity checks on two-qubit states.
pub const STATE_TOL: f64 = 1e-10;

/// Largest modulus tolerated on the entries that must vanish in X form.
pub const X_FORM_TOL: f64 = 1e-9;

/// A validated 4x4 two-qubit density matrix: Hermitian, unit trace and
/// positive semidefinite within [`STATE_TOL`].
///
/// Basis order: `(|+1,+1>, |+1,-1>, |-1,+1>, |-1,-1>)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoQubitDensity {
    matrix: ComplexMatrix,
}

impl TwoQubitDensity {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: matrix.rows() });
        }
        let defect = matrix.hermiticity_defect();
        if defect > STATE_TOL {
            return Err(Error::NotHermitian(defect));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::InvalidDensity(format!("trace {tr} != 1")));
        }
        let hermitized = ComplexMatrix::from_fn(4, 4, |i, j| 0.5 * (matrix[(i, j)] + matrix[(j, i)].conj()));
        let min = hermitian_eigen(&hermitized)?.eigenvalues[0];
        if min < -STATE_TOL {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }
}

/// Positions that must vanish for a two-qubit matrix to be in X form.
const OFF_X: [(usize, usize); 10] = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 0), (2, 0), (3, 0), (3, 1), (3, 2)];

/// Largest modulus among the entries outside the X pattern (diagonal plus the
/// `|+1,-1> <-> |-1,+1>` coherence).
pub fn off_x_residue(m: &ComplexMatrix) -> f64 {
    OFF_X.iter().map(|&ij| m[ij].norm()).fold(0.0, f64::max)
}

/// Two-qubit X state
///
/// ```text
/// | a 0  0 0 |
/// | 0 b  c 0 |
/// | 0 c* d 0 |
/// | 0 0  0 e |
/// ```
///
/// with populations of `|+1,+1>, |+1,-1>, |-1,+1>, |-1,-1>` and the single
/// coherence `c` between the antiparallel configurations.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XStateDensity {
    a: f64,
    b: f64,
    c: C64,
    d: f64,
    e: f64,
}

impl XStateDensity {
    /// Validates populations (non-negative, summing to one) and the
    /// positivity bound `|c| <= sqrt(b d)`, both within [`STATE_TOL`].
    /// Populations inside the tolerance band below zero are clamped to zero.
    pub fn new(a: f64, b: f64, c: C64, d: f64, e: f64) -> Result<Self> {
        let pops = [a, b, d, e];
        if pops.iter().chain([c.re, c.im].iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidDensity("non-finite X-state parameter".into()));
        }
        if let Some(p) = pops.iter().find(|&&p| p < -STATE_TOL) {
            return Err(Error::InvalidDensity(format!("negative population {p:e}")));
        }
        let sum: f64 = pops.iter().sum();
        if (sum - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidDensity(format!("populations sum to {sum}")));
        }
        let (a, b, d, e) = (a.max(0.0), b.max(0.0), d.max(0.0), e.max(0.0));
        let bound = (b * d).sqrt();
        if c.norm() > bound + STATE_TOL {
            return Err(Error::InvalidDensity(format!("|c| = {} exceeds sqrt(bd) = {bound}", c.norm())));
        }
        Ok(Self { a, b, c, d, e })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> C64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn e(&self) -> f64 {
        self.e
    }

    /// `Tr ρ² = a² + b² + d² + e² + 2|c|²`.
    pub fn purity(&self) -> f64 {
        self.a * self.a + self.b * self.b + self.d * self.d + self.e * self.e + 2.0 * self.c.norm_sqr()
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::diagonal(&[self.a, self.b, self.d, self.e].map(|p| C64::new(p, 0.0)));
        m[(1, 2)] = self.c;
        m[(2, 1)] = self.c.conj();
        m
    }

    /// Largest component-wise deviation over `(a, b, d, e, Re c, Im c)`.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        [
            self.a - other.a,
            self.b - other.b,
            self.d - other.d,
            self.e - other.e,
            self.c.re - other.c.re,
            self.c.im - other.c.im,
        ]
        .iter()
        .map(|v| v.abs())
        .fold(0.0, f64::max)
    }
}

pub fn x_state_to_matrix(x: &XStateDensity) -> TwoQubitDensity {
    TwoQubitDensity { matrix: x.to_matrix() }
}

/// Extracts the X-state parameters, failing with [`Error::NotXForm`] if any
/// entry outside the X pattern exceeds [`X_FORM_TOL`].
pub fn matrix_to_x_state(rho: &TwoQubitDensity) -> Result<XStateDensity> {
    let m = rho.matrix();
    let residue = off_x_residue(m);
    if residue > X_FORM_TOL {
        return Err(Error::NotXForm(residue));
    }
    XStateDensity::new(m[(0, 0)].re, m[(1, 1)].re, m[(1, 2)], m[(2, 2)].re, m[(3, 3)].re)
}

/// Draws a valid X state: flat Dirichlet populations, `|c|` uniform in
/// `[0, sqrt(bd)]` and a uniform phase.
pub fn random_x_state<R: Rng + ?Sized>(rng: &mut R) -> XStateDensity {
    let w: [f64; 4] = std::array::from_fn(|_| Exp1.sample(rng));
    let total: f64 = w.iter().sum();
    let [a, b, d, e] = w.map(|v| v / total);
    let modulus = rng.random::<f64>() * (b * d).sqrt();
    let phase = rng.random::<f64>() * std::f64::consts::TAU;
    XStateDensity::new(a, b, C64::from_polar(modulus, phase), d, e).expect("sampler stays inside the valid region")
}
