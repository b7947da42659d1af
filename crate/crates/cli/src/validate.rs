//! The full consistency suite at oracle scale (`N <= 8`).
//!
//! Each check records the largest deviation it saw against a fixed
//! tolerance. Two deliberate mutations let the suite prove it can fail: the
//! sign-flipped `f_N` polynomial, and a spin-star Hamiltonian at half its
//! normalization.

use std::f64::consts::PI;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinstar_core::entanglement::{
    concurrence_from_covariances, concurrence_wootters, concurrence_x, covariance_pair_x, is_separable,
    matrix_to_x_state, off_x_residue, random_x_state, x_state_to_matrix, TwoQubitDensity, XStateDensity,
};
use spinstar_core::qcore::{pair_density_from_ket, ComplexScalar, Propagator, Spin, SpinBasisIndex, StateVector};
use spinstar_core::spinstar::{
    bath_j_squared, build_general_heisenberg, build_spin_star_hamiltonian, case2_frequency, closed_form_case1,
    closed_form_case2_cov_xx, f_n, f_n_printed, reduce_sector_to_pair, sector_evolve, total_sz, CoupledBasisLabel,
    InitialState, Oracle, SpinStarConfig,
};

use crate::Result;

pub const ORACLE_BATHS: [usize; 4] = [2, 4, 6, 8];
pub const RATIOS: [f64; 3] = [0.1, 1.0, 10.0];
pub const EQUIVALENCE_TOL: f64 = 1e-9;
const RANDOM_STATES: usize = 10_000;

/// A deliberate defect injected into the suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// Use the printed `f_N` polynomial with the negated linear term.
    PrintedFnSign,
    /// Run the oracle on half the spin-star Hamiltonian.
    HalvedHamiltonian,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn new(name: &'static str, max_deviation: f64, tolerance: f64) -> Self {
        // NaN deviations fail
        Self { name, max_deviation, tolerance, passed: max_deviation <= tolerance }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{verdict} {:<36} max_dev={:.3e} tol={:.0e}", c.name, c.max_deviation, c.tolerance)?;
        }
        write!(f, "{}", if self.passed() { "all checks passed" } else { "validation FAILED" })
    }
}

fn oracle_for(cfg: &SpinStarConfig, mutation: Mutation) -> Result<Oracle> {
    Ok(match mutation {
        Mutation::HalvedHamiltonian => {
            let h = build_spin_star_hamiltonian(cfg)?.scale(ComplexScalar::new(0.5, 0.0));
            Oracle::with_hamiltonian(cfg, h)?
        }
        _ => Oracle::new(cfg)?,
    })
}

fn polynomial(mutation: Mutation) -> fn(usize, f64) -> spinstar_core::Result<f64> {
    match mutation {
        Mutation::PrintedFnSign => f_n_printed,
        _ => f_n,
    }
}

fn grid(count: usize, end: f64) -> impl Iterator<Item = f64> {
    (0..count).map(move |k| end * k as f64 / (count - 1) as f64)
}

fn sector_pair(cfg: &SpinStarConfig, initial: &InitialState, t: f64) -> Result<XStateDensity> {
    let (sa, sb) = initial.central_pair_over_ground_bath(cfg)?;
    let label = CoupledBasisLabel::over_ground_bath(cfg.bath_size(), sa, sb);
    Ok(reduce_sector_to_pair(&sector_evolve(cfg, &label, t)?)?)
}

/// Unclamped concurrence branch `2(|c| - sqrt(a e))`.
pub fn concurrence_branch(x: &XStateDensity) -> f64 {
    2.0 * (x.c().norm() - (x.a() * x.e()).sqrt())
}

pub fn run_validate() -> Result<ValidationReport> {
    run_validate_with(Mutation::None)
}

pub fn run_validate_with(mutation: Mutation) -> Result<ValidationReport> {
    let fpoly = polynomial(mutation);
    let mut closed1: f64 = 0.0;
    let mut sector: f64 = 0.0;
    let mut cov2: f64 = 0.0;
    let mut conc2: f64 = 0.0;
    let mut fn_oracle: f64 = 0.0;
    let mut drift: f64 = 0.0;

    for n in ORACLE_BATHS {
        for r in RATIOS {
            let cfg = SpinStarConfig::with_ratio(n, 1.0, r)?;
            let oracle = oracle_for(&cfg, mutation)?;
            let (sz, j2) = (total_sz(&cfg)?, bath_j_squared(&cfg)?);
            for initial in [InitialState::Case1, InitialState::Case2] {
                let run = oracle.prepare(&initial)?;
                let psi0 = run.ket_at(0.0);
                let charges = |psi: &StateVector| -> Result<[f64; 3]> {
                    Ok([
                        sz.expectation(psi.amplitudes())?.re,
                        j2.expectation(psi.amplitudes())?.re,
                        oracle.energy(psi)?,
                    ])
                };
                let start = charges(&psi0)?;
                for t in grid(50, 2.0) {
                    let psi = run.ket_at(t);
                    let now = charges(&psi)?;
                    drift = start.iter().zip(now).map(|(a, b)| (a - b).abs()).fold(drift, f64::max);
                    let pair = oracle.pair_state(&psi)?;
                    sector = sector.max(sector_pair(&cfg, &initial, t)?.max_deviation(&pair));
                    match initial {
                        InitialState::Case1 => {
                            let want = closed_form_case1(&cfg, t).to_x_state()?;
                            closed1 = closed1.max(pair.max_deviation(&want));
                        }
                        _ if r == 1.0 => {
                            let want = closed_form_case2_cov_xx(n, 1.0, t)?;
                            cov2 = cov2.max((covariance_pair_x(&pair).cov_xx - want).abs());
                            conc2 = conc2.max(concurrence_x(&pair));
                        }
                        _ => {}
                    }
                }
                if r == 1.0 && initial == InitialState::Case2 && n >= 4 {
                    let omega = case2_frequency(n, 1.0);
                    for phase in grid(101, 2.0 * PI) {
                        let pair = run.pair_at(phase / omega)?;
                        let x = phase.cos().clamp(-1.0, 1.0);
                        fn_oracle = fn_oracle.max((concurrence_branch(&pair) - fpoly(n, x)?).abs());
                    }
                }
            }
        }
    }

    let fn_boundary = (2..=100).map(|n| fpoly(n, 1.0).map(f64::abs)).try_fold(0.0, |m: f64, v| v.map(|v| m.max(v)))?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut verdicts, mut cov_identity, mut wootters) = (0usize, 0.0f64, 0.0f64);
    for _ in 0..RANDOM_STATES {
        let x = random_x_state(&mut rng);
        let c = concurrence_x(&x);
        verdicts += usize::from(is_separable(&x) != (c == 0.0));
        cov_identity = cov_identity.max((concurrence_from_covariances(&x) - c).abs());
        wootters = wootters.max((concurrence_wootters(&x_state_to_matrix(&x))? - c).abs());
    }

    Ok(ValidationReport {
        checks: vec![
            Check::new("oracle_vs_closed_form_case1", closed1, EQUIVALENCE_TOL),
            Check::new("oracle_vs_sector", sector, EQUIVALENCE_TOL),
            Check::new("oracle_vs_closed_form_case2_cov_xx", cov2, EQUIVALENCE_TOL),
            Check::new("oracle_case2_concurrence", conc2, EQUIVALENCE_TOL),
            Check::new("conservation_sz_j2_energy", drift, EQUIVALENCE_TOL),
            Check::new("f_n_at_one", fn_boundary, 1e-12),
            Check::new("f_n_vs_oracle", fn_oracle, EQUIVALENCE_TOL),
            Check::new("separability_vs_concurrence", verdicts as f64, 0.0),
            Check::new("covariance_concurrence_identity", cov_identity, 1e-12),
            Check::new("wootters_vs_x_formula", wootters, EQUIVALENCE_TOL),
            Check::new("x_form_preservation", x_form_residue(&mut rng)?, 1e-10),
        ],
    })
}

/// Largest off-X residue over all pairs of a four-spin register under 20
/// random isotropic Hamiltonians, from `|+1,-1,+1,-1>`.
fn x_form_residue(rng: &mut ChaCha8Rng) -> Result<f64> {
    let m = 4;
    let spins = [Spin::Up, Spin::Down, Spin::Up, Spin::Down];
    let psi0 = StateVector::basis(1 << m, SpinBasisIndex::from_spins(&spins)?.index());
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let mut c = vec![vec![0.0; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                c[i][j] = rng.random_range(-1.0..1.0);
                c[j][i] = c[i][j];
            }
        }
        let u = Propagator::new(&build_general_heisenberg(m, &c)?)?;
        for t in grid(20, 3.0) {
            let psi = u.evolve(&psi0, t)?;
            for i in 0..m {
                for j in i + 1..m {
                    let rho = pair_density_from_ket(&psi, i, j, m)?;
                    worst = worst.max(off_x_residue(&rho));
                    matrix_to_x_state(&TwoQubitDensity::new(rho)?)?;
                }
            }
        }
    }
    Ok(worst)
}
