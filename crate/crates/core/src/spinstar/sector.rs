//! Dynamics restricted to one invariant subspace of the spin-star model.
//!
//! With the bath in a coupled basis `|J, M, ν>`, the Hamiltonian becomes
//! `2α_A (σ+^A J- + σ-^A J+) + 2α_B (σ+^B J- + σ-^B J+)`. It conserves `J`, `ν`
//! and the total `S_z = M + (σ_A + σ_B)/2`, so a state `|σ_A, σ_B; J, M, ν>`
//! only ever mixes with the (at most) four configurations of the central pair
//! that share its total `S_z`. The bath label follows from the pair
//! configuration, and configurations whose `|M'|` would exceed `J` drop out.
//!
//! Half-integer quantum numbers are carried doubled (`two_j = 2J`,
//! `two_m = 2M`) so all label arithmetic stays in integers.

use num_complex::Complex64 as C64;

use super::SpinStarConfig;
use crate::entanglement::XStateDensity;
use crate::qcore::Spin;
use crate::{Error, Result};

/// `|σ_A, σ_B; J, M, ν>` with `J` and `M` stored doubled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoupledBasisLabel {
    two_j: u32,
    two_m: i32,
    nu: u32,
    sigma_a: Spin,
    sigma_b: Spin,
}

impl CoupledBasisLabel {
    pub fn new(two_j: u32, two_m: i32, nu: u32, sigma_a: Spin, sigma_b: Spin) -> Result<Self> {
        if two_m.unsigned_abs() > two_j {
            return Err(Error::InvalidLabel(format!("|M| = {}/2 exceeds J = {two_j}/2", two_m.abs())));
        }
        if (two_j as i64 - two_m as i64) % 2 != 0 {
            return Err(Error::InvalidLabel(format!("J - M = ({two_j} - {two_m})/2 is not an integer")));
        }
        if nu == 0 {
            return Err(Error::InvalidLabel("degeneracy index starts at 1".into()));
        }
        Ok(Self { two_j, two_m, nu, sigma_a, sigma_b })
    }

    /// Central pair over the bath ground state `|N/2, -N/2, 1>`.
    pub fn over_ground_bath(bath_size: usize, sigma_a: Spin, sigma_b: Spin) -> Self {
        let two_j = bath_size as u32;
        Self { two_j, two_m: -(two_j as i32), nu: 1, sigma_a, sigma_b }
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    pub fn two_m(&self) -> i32 {
        self.two_m
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    pub fn m(&self) -> f64 {
        self.two_m as f64 / 2.0
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn sigma_a(&self) -> Spin {
        self.sigma_a
    }

    pub fn sigma_b(&self) -> Spin {
        self.sigma_b
    }

    /// `2 S_z` of the whole system.
    pub fn two_total_sz(&self) -> i32 {
        self.two_m + self.sigma_a.sign() + self.sigma_b.sign()
    }

    fn same_bath_tower(&self, other: &Self) -> bool {
        self.two_j == other.two_j && self.nu == other.nu
    }
}

/// `L±(J, M) = sqrt(J(J+1) - M(M±1))` from doubled quantum numbers.
pub fn ladder(two_j: u32, two_m: i32, raising: bool) -> f64 {
    let (j2, m2) = (two_j as f64, two_m as f64);
    let shift = if raising { 2.0 } else { -2.0 };
    ((j2 * (j2 + 2.0) - m2 * (m2 + shift)) / 4.0).max(0.0).sqrt()
}

/// Central-pair configurations in the order `(++, +-, -+, --)`.
const PAIR_ORDER: [(Spin, Spin); 4] =
    [(Spin::Up, Spin::Up), (Spin::Up, Spin::Down), (Spin::Down, Spin::Up), (Spin::Down, Spin::Down)];

/// The Hamiltonian restricted to the invariant subspace reachable from a
/// starting label. Labels follow the pair order `(++, +-, -+, --)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorHamiltonian {
    labels: Vec<CoupledBasisLabel>,
    matrix: [[f64; 4]; 4],
}

impl SectorHamiltonian {
    pub fn labels(&self) -> &[CoupledBasisLabel] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.dim() && j < self.dim());
        self.matrix[i][j]
    }

    /// The `dim x dim` block as nested rows.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim()).map(|i| self.matrix[i][..self.dim()].to_vec()).collect()
    }

    pub fn position(&self, label: &CoupledBasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn propagator(&self) -> SectorPropagator {
        let (values, vectors) = jacobi_eigen(self.matrix, self.dim());
        SectorPropagator { hamiltonian: self.clone(), values, vectors }
    }
}

/// Builds the invariant-subspace Hamiltonian containing `start`.
///
/// Only the non-degenerate top tower `J = N/2` is supported.
pub fn sector_hamiltonian(cfg: &SpinStarConfig, start: &CoupledBasisLabel) -> Result<SectorHamiltonian> {
    if start.two_j as usize != cfg.bath_size() {
        return Err(Error::InvalidLabel(format!(
            "only the J = N/2 tower is supported (J = {}, N = {})",
            start.j(),
            cfg.bath_size()
        )));
    }
    if start.nu != 1 {
        return Err(Error::InvalidLabel("the J = N/2 tower is non-degenerate, ν must be 1".into()));
    }
    let two_sz = start.two_total_sz();
    let labels: Vec<CoupledBasisLabel> = PAIR_ORDER
        .iter()
        .filter_map(|&(sa, sb)| {
            let two_m = two_sz - sa.sign() - sb.sign();
            CoupledBasisLabel::new(start.two_j, two_m, start.nu, sa, sb).ok()
        })
        .collect();

    let mut matrix = [[0.0; 4]; 4];
    for (p, lp) in labels.iter().enumerate() {
        for (q, lq) in labels.iter().enumerate() {
            // σ-^X J+ lowers one central spin and raises the bath by one unit
            let lowers = |x: fn(&CoupledBasisLabel) -> Spin, y: fn(&CoupledBasisLabel) -> Spin| {
                x(lp) == Spin::Up && x(lq) == Spin::Down && y(lp) == y(lq) && lq.two_m == lp.two_m + 2
            };
            let coupling = if lowers(|l| l.sigma_a, |l| l.sigma_b) {
                cfg.alpha_a()
            } else if lowers(|l| l.sigma_b, |l| l.sigma_a) {
                cfg.alpha_b()
            } else {
                continue;
            };
            let element = 2.0 * coupling * ladder(lp.two_j, lp.two_m, true);
            matrix[p][q] = element;
            matrix[q][p] = element;
        }
    }
    Ok(SectorHamiltonian { labels, matrix })
}

/// Cyclic Jacobi diagonalization of a real symmetric block of size `n <= 4`.
/// Returns eigenvalues and the eigenvectors as columns.
fn jacobi_eigen(mut a: [[f64; 4]; 4], n: usize) -> ([f64; 4], [[f64; 4]; 4]) {
    let mut v = [[0.0; 4]; 4];
    for (k, row) in v.iter_mut().enumerate() {
        row[k] = 1.0;
    }
    let scale: f64 = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a[i][j].abs()).sum();
    for _sweep in 0..64 {
        let off: f64 = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off.sqrt() <= f64::EPSILON * 1e-2 * scale.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for row in v.iter_mut().take(n) {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut values = [0.0; 4];
    for k in 0..n {
        values[k] = a[k][k];
    }
    (values, v)
}

/// `exp(-i H t)` on one sector.
#[derive(Clone, Debug)]
pub struct SectorPropagator {
    hamiltonian: SectorHamiltonian,
    values: [f64; 4],
    vectors: [[f64; 4]; 4],
}

impl SectorPropagator {
    pub fn hamiltonian(&self) -> &SectorHamiltonian {
        &self.hamiltonian
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.values[..self.hamiltonian.dim()]
    }

    /// Evolves the basis state at position `start` for time `t`. At `t = 0`
    /// the start vector comes back exactly, free of reconstruction rounding.
    pub fn evolve_from(&self, start: usize, t: f64) -> SectorState {
        let n = self.hamiltonian.dim();
        if t == 0.0 {
            let amplitudes = (0..n).map(|i| C64::new(if i == start { 1.0 } else { 0.0 }, 0.0)).collect();
            return SectorState { labels: self.hamiltonian.labels.clone(), amplitudes };
        }
        let v = &self.vectors;
        let amplitudes =
            (0..n).map(|i| (0..n).map(|k| C64::from_polar(v[i][k] * v[start][k], -self.values[k] * t)).sum()).collect();
        SectorState { labels: self.hamiltonian.labels.clone(), amplitudes }
    }
}

/// Amplitudes over the labels of one sector.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorState {
    labels: Vec<CoupledBasisLabel>,
    amplitudes: Vec<C64>,
}

impl SectorState {
    /// Checks the sector invariants: equal lengths, a shared `J` tower and
    /// total `S_z`, and unit norm within `1e-10`.
    pub fn new(labels: Vec<CoupledBasisLabel>, amplitudes: Vec<C64>) -> Result<Self> {
        if labels.len() != amplitudes.len() || labels.is_empty() || labels.len() > 4 {
            return Err(Error::DimensionMismatch { expected: labels.len(), found: amplitudes.len() });
        }
        let first = labels[0];
        if labels.iter().any(|l| !l.same_bath_tower(&first) || l.two_total_sz() != first.two_total_sz()) {
            return Err(Error::InvalidLabel("sector labels must share J, ν and total S_z".into()));
        }
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::Unnormalized(norm.sqrt()));
        }
        Ok(Self { labels, amplitudes })
    }

    pub fn labels(&self) -> &[CoupledBasisLabel] {
        &self.labels
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, label: &CoupledBasisLabel) -> Option<C64> {
        self.labels.iter().position(|l| l == label).map(|k| self.amplitudes[k])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }
}

/// `exp(-i H t)` applied to the coupled-basis state `start`.
pub fn sector_evolve(cfg: &SpinStarConfig, start: &CoupledBasisLabel, t: f64) -> Result<SectorState> {
    let h = sector_hamiltonian(cfg, start)?;
    let pos = h.position(start).expect("start label belongs to its own sector");
    Ok(h.propagator().evolve_from(pos, t))
}

/// Traces the bath out of a sector state.
///
/// Populations group `|amplitude|²` by central configuration; the coherence
/// collects `amp(+-) conj(amp(-+))` over labels with the same bath quantum
/// numbers, the only pairs the bath trace keeps.
pub fn reduce_sector_to_pair(state: &SectorState) -> Result<XStateDensity> {
    let mut pops = [0.0; 4];
    let mut coherence = C64::new(0.0, 0.0);
    for (label, amp) in state.labels.iter().zip(&state.amplitudes) {
        let idx = PAIR_ORDER.iter().position(|&p| p == (label.sigma_a, label.sigma_b)).expect("pair order is total");
        pops[idx] += amp.norm_sqr();
        if (label.sigma_a, label.sigma_b) == (Spin::Up, Spin::Down) {
            for (other, amp_other) in state.labels.iter().zip(&state.amplitudes) {
                if (other.sigma_a, other.sigma_b) == (Spin::Down, Spin::Up)
                    && other.same_bath_tower(label)
                    && other.two_m == label.two_m
                {
                    coherence += amp * amp_other.conj();
                }
            }
        }
    }
    XStateDensity::new(pops[0], pops[1], coherence, pops[2], pops[3])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case1_label(n: usize) -> CoupledBasisLabel {
        CoupledBasisLabel::over_ground_bath(n, Spin::Up, Spin::Down)
    }

    #[test]
    fn label_validation() {
        assert!(CoupledBasisLabel::new(2, 4, 1, Spin::Up, Spin::Up).is_err());
        assert!(CoupledBasisLabel::new(3, 0, 1, Spin::Up, Spin::Up).is_err());
        assert!(CoupledBasisLabel::new(3, -1, 0, Spin::Up, Spin::Up).is_err());
        let l = CoupledBasisLabel::new(3, -1, 1, Spin::Down, Spin::Up).unwrap();
        assert_eq!((l.j(), l.m(), l.two_total_sz()), (1.5, -0.5, -1));
    }

    #[test]
    fn ladder_at_bottom_of_tower() {
        for n in 1..20u32 {
            assert!((ladder(n, -(n as i32), true) - (n as f64).sqrt()).abs() < 1e-12);
            assert_eq!(ladder(n, n as i32, true), 0.0);
        }
    }

    #[test]
    fn case1_sector_structure() {
        let cfg = SpinStarConfig::new(5, 0.8, 1.7).unwrap();
        let h = sector_hamiltonian(&cfg, &case1_label(5)).unwrap();
        assert_eq!(h.dim(), 3);
        let s = 2.0 * 5f64.sqrt();
        let expected = [[0.0, 0.0, 0.8 * s], [0.0, 0.0, 1.7 * s], [0.8 * s, 1.7 * s, 0.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((h.get(i, j) - expected[i][j]).abs() < 1e-12);
            }
        }
        let kinds: Vec<_> = h.labels().iter().map(|l| (l.sigma_a(), l.sigma_b(), l.two_m())).collect();
        assert_eq!(kinds, vec![(Spin::Up, Spin::Down, -5), (Spin::Down, Spin::Up, -5), (Spin::Down, Spin::Down, -3)]);
    }

    #[test]
    fn case2_sector_couplings() {
        let n = 6;
        let cfg = SpinStarConfig::new(n, 1.0, 1.0).unwrap();
        let h = sector_hamiltonian(&cfg, &CoupledBasisLabel::over_ground_bath(n, Spin::Up, Spin::Up)).unwrap();
        assert_eq!(h.dim(), 4);
        let first = 2.0 * (n as f64).sqrt();
        let second = 2.0 * (2.0 * (n as f64 - 1.0)).sqrt();
        assert!((h.get(0, 1) - first).abs() < 1e-12 && (h.get(0, 2) - first).abs() < 1e-12);
        assert!((h.get(1, 3) - second).abs() < 1e-12 && (h.get(2, 3) - second).abs() < 1e-12);
        assert_eq!(h.get(0, 3), 0.0);
        assert_eq!(h.get(1, 2), 0.0);
    }

    #[test]
    fn top_of_tower_is_frozen() {
        let n = 4;
        let cfg = SpinStarConfig::new(n, 1.0, 2.0).unwrap();
        let top = CoupledBasisLabel::new(n as u32, n as i32, 1, Spin::Up, Spin::Up).unwrap();
        let h = sector_hamiltonian(&cfg, &top).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(h.get(0, 0), 0.0);
        let s = sector_evolve(&cfg, &top, 3.7).unwrap();
        assert!((s.amplitudes()[0] - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn other_towers_are_rejected() {
        let cfg = SpinStarConfig::new(4, 1.0, 1.0).unwrap();
        let low = CoupledBasisLabel::new(2, 0, 1, Spin::Up, Spin::Down).unwrap();
        assert!(matches!(sector_hamiltonian(&cfg, &low), Err(Error::InvalidLabel(_))));
    }

    #[test]
    fn zero_time_keeps_start() {
        let cfg = SpinStarConfig::new(3, 1.0, 0.4).unwrap();
        let state = sector_evolve(&cfg, &case1_label(3), 0.0).unwrap();
        assert!((state.amplitude(&case1_label(3)).unwrap() - C64::new(1.0, 0.0)).norm() < 1e-15);
        let x = reduce_sector_to_pair(&state).unwrap();
        assert!((x.b() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn jacobi_reconstructs() {
        let m = [[1.0, 2.0, 0.5, 0.0], [2.0, -1.0, 0.3, 0.7], [0.5, 0.3, 0.0, 1.1], [0.0, 0.7, 1.1, 2.0]];
        let (w, v) = jacobi_eigen(m, 4);
        for i in 0..4 {
            for j in 0..4 {
                let r: f64 = (0..4).map(|k| v[i][k] * w[k] * v[j][k]).sum();
                assert!((r - m[i][j]).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn sector_state_validation() {
        let a = case1_label(2);
        let b = CoupledBasisLabel::over_ground_bath(2, Spin::Up, Spin::Up);
        assert!(SectorState::new(vec![a, b], vec![C64::new(0.6, 0.0), C64::new(0.8, 0.0)]).is_err());
        assert!(SectorState::new(vec![a], vec![C64::new(0.5, 0.0)]).is_err());
        assert!(SectorState::new(vec![a], vec![C64::new(0.0, 1.0)]).is_ok());
    }
}
