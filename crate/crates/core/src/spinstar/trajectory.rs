use rayon::prelude::*;

use super::{
    closed_form_case1, closed_form_case2, sector_hamiltonian, CoupledBasisLabel, InitialState, Oracle,
    SectorPropagator, SpinStarConfig,
};
use crate::entanglement::{concurrence_x, covariance_pair_x, CovariancePair, XStateDensity};
use crate::{Error, Result};

/// How central-pair states are produced along a trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    ClosedForm,
    Sector,
    Oracle,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::ClosedForm => "closed-form",
            Engine::Sector => "sector",
            Engine::Oracle => "oracle",
        }
    }
}

/// One sampled time: the pair state and the quantities derived from it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectoryPoint {
    pub tau_a: f64,
    pub state: XStateDensity,
    pub covariances: CovariancePair,
    pub concurrence: f64,
}

impl TrajectoryPoint {
    pub fn from_state(tau_a: f64, state: XStateDensity) -> Self {
        Self { tau_a, state, covariances: covariance_pair_x(&state), concurrence: concurrence_x(&state) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TimeSeries {
    pub grid: Vec<f64>,
    pub points: Vec<TrajectoryPoint>,
}

impl TimeSeries {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &TrajectoryPoint> {
        self.points.iter()
    }
}

enum Backend {
    ClosedForm1,
    ClosedForm2,
    Sector { propagator: Box<SectorPropagator>, start: usize },
    Oracle { oracle: Box<Oracle>, initial: InitialState },
}

/// A prepared engine that evaluates the pair state at any dimensionless
/// time `α_A t`.
pub struct PairDynamics {
    cfg: SpinStarConfig,
    backend: Backend,
}

impl PairDynamics {
    pub fn new(cfg: &SpinStarConfig, initial: &InitialState, engine: Engine) -> Result<Self> {
        let backend = match engine {
            Engine::ClosedForm => match initial {
                InitialState::Case1 => Backend::ClosedForm1,
                InitialState::Case2 if cfg.alpha_a() == cfg.alpha_b() => Backend::ClosedForm2,
                InitialState::Case2 => {
                    return Err(Error::InvalidConfig("the case-2 closed form requires alpha_a == alpha_b".into()))
                }
                InitialState::Product(_) => {
                    return Err(Error::InvalidConfig("closed forms exist only for case1 and case2".into()))
                }
            },
            Engine::Sector => {
                let (sa, sb) = initial.central_pair_over_ground_bath(cfg)?;
                let label = CoupledBasisLabel::over_ground_bath(cfg.bath_size(), sa, sb);
                let h = sector_hamiltonian(cfg, &label)?;
                let start = h.position(&label).expect("start label belongs to its sector");
                Backend::Sector { propagator: Box::new(h.propagator()), start }
            }
            Engine::Oracle => Backend::Oracle { oracle: Box::new(Oracle::new(cfg)?), initial: initial.clone() },
        };
        Ok(Self { cfg: *cfg, backend })
    }

    pub fn config(&self) -> &SpinStarConfig {
        &self.cfg
    }

    pub fn state_at(&self, tau_a: f64) -> Result<XStateDensity> {
        let t = tau_a / self.cfg.alpha_a();
        match &self.backend {
            Backend::ClosedForm1 => closed_form_case1(&self.cfg, t).to_x_state(),
            Backend::ClosedForm2 => closed_form_case2(self.cfg.bath_size(), self.cfg.alpha_a(), t),
            Backend::Sector { propagator, start } => super::reduce_sector_to_pair(&propagator.evolve_from(*start, t)),
            Backend::Oracle { oracle, initial } => oracle.prepare(initial)?.pair_at(t),
        }
    }

    pub fn point_at(&self, tau_a: f64) -> Result<TrajectoryPoint> {
        Ok(TrajectoryPoint::from_state(tau_a, self.state_at(tau_a)?))
    }

    /// Evaluates a strictly increasing grid. Points are computed in parallel
    /// and returned in grid order.
    pub fn sample(&self, grid: &[f64]) -> Result<TimeSeries> {
        if grid.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less)) {
            return Err(Error::OutOfDomain("time grid must be strictly increasing".into()));
        }
        let points = match &self.backend {
            Backend::Oracle { oracle, initial } => {
                let run = oracle.prepare(initial)?;
                let t_of = |tau: f64| tau / self.cfg.alpha_a();
                grid.par_iter()
                    .map(|&tau| Ok(TrajectoryPoint::from_state(tau, run.pair_at(t_of(tau))?)))
                    .collect::<Result<Vec<_>>>()?
            }
            _ => grid.par_iter().map(|&tau| self.point_at(tau)).collect::<Result<Vec<_>>>()?,
        };
        Ok(TimeSeries { grid: grid.to_vec(), points })
    }
}

/// `steps` uniformly spaced points on `[0, t_max]`, both ends included.
pub fn uniform_grid(t_max: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::OutOfDomain(format!("need at least 2 grid points, got {steps}")));
    }
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::OutOfDomain(format!("grid end must be positive and finite, got {t_max}")));
    }
    let last = (steps - 1) as f64;
    Ok((0..steps).map(|k| t_max * k as f64 / last).collect())
}

/// Samples the central-pair dynamics on a uniform grid over
/// `α_A t ∈ [0, t_max]`.
pub fn trajectory(
    cfg: &SpinStarConfig,
    initial: &InitialState,
    t_max: f64,
    steps: usize,
    engine: Engine,
) -> Result<TimeSeries> {
    let grid = uniform_grid(t_max, steps)?;
    PairDynamics::new(cfg, initial, engine)?.sample(&grid)
}

/// Which kind of stationary point to look for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extremum {
    Max,
    Min,
}

impl Extremum {
    pub fn name(self) -> &'static str {
        match self {
            Extremum::Max => "max",
            Extremum::Min => "min",
        }
    }

    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Extremum::Max => a > b,
            Extremum::Min => a < b,
        }
    }
}

/// Indices `k` of strict-on-one-side interior grid extrema: `values[k]` is at
/// least as extreme as both neighbours and strictly more extreme than one.
pub fn grid_extrema(values: &[f64], kind: Extremum) -> Vec<usize> {
    (1..values.len().saturating_sub(1))
        .filter(|&k| {
            let (l, m, r) = (values[k - 1], values[k], values[k + 1]);
            !kind.better(l, m) && !kind.better(r, m) && (kind.better(m, l) || kind.better(m, r))
        })
        .collect()
}

/// Golden-section search for an extremum of a unimodal `f` on `[lo, hi]`.
/// Returns `(t*, f(t*))`, the best point seen.
pub fn refine_extremum<F>(f: F, lo: f64, hi: f64, kind: Extremum) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
        return Err(Error::OutOfDomain(format!("empty bracket [{lo}, {hi}]")));
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    let mut best = [(lo, f(lo)?), (hi, f(hi)?), (x1, f1), (x2, f2)]
        .into_iter()
        .reduce(|p, q| if kind.better(q.1, p.1) { q } else { p })
        .expect("four candidates");
    // 200 shrinks of 0.618 reach the f64 resolution of any finite bracket
    for _ in 0..200 {
        if b - a <= 4.0 * f64::EPSILON * a.abs().max(b.abs()).max(1.0) {
            break;
        }
        if kind.better(f1, f2) || f1 == f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1)?;
            if kind.better(f1, best.1) {
                best = (x1, f1);
            }
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2)?;
            if kind.better(f2, best.1) {
                best = (x2, f2);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        assert_eq!(uniform_grid(1.0, 2).unwrap(), vec![0.0, 1.0]);
        assert!(uniform_grid(1.0, 1).is_err());
        assert!(uniform_grid(0.0, 5).is_err());
        let g = uniform_grid(2.0, 5).unwrap();
        assert_eq!(g, vec![0.0, 0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn closed_form_case2_needs_symmetric_couplings() {
        let cfg = SpinStarConfig::with_ratio(4, 1.0, 2.0).unwrap();
        assert!(PairDynamics::new(&cfg, &InitialState::Case2, Engine::ClosedForm).is_err());
        assert!(PairDynamics::new(&cfg, &InitialState::Case2, Engine::Sector).is_ok());
    }

    #[test]
    fn case1_starts_uncorrelated() {
        let cfg = SpinStarConfig::with_ratio(100, 1.0, 1.0).unwrap();
        for engine in [Engine::ClosedForm, Engine::Sector] {
            let ts = trajectory(&cfg, &InitialState::Case1, 1.0, 11, engine).unwrap();
            let p0 = ts.points[0];
            assert!((p0.state.b() - 1.0).abs() < 1e-14);
            let c = p0.covariances;
            assert!(c.cov_xx.abs() < 1e-14 && c.cov_xy.abs() < 1e-14 && p0.concurrence < 1e-14);
        }
    }

    #[test]
    fn extrema_on_a_grid() {
        let v = [0.0, 1.0, 0.5, 0.5, 2.0, 2.0, 1.0];
        assert_eq!(grid_extrema(&v, Extremum::Max), vec![1, 4, 5]);
        assert_eq!(grid_extrema(&v, Extremum::Min), vec![2, 3]);
    }

    #[test]
    fn golden_section_finds_sine_peak() {
        let (t, v) = refine_extremum(|t| Ok(t.sin()), 1.0, 2.0, Extremum::Max).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        assert!((t - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
        let (_, low) = refine_extremum(|t| Ok((t - 0.3).powi(2)), 0.0, 1.0, Extremum::Min).unwrap();
        assert!(low < 1e-15);
        assert!(refine_extremum(Ok, 1.0, 1.0, Extremum::Max).is_err());
    }

    #[test]
    fn rejects_unordered_grid() {
        let cfg = SpinStarConfig::new(3, 1.0, 1.0).unwrap();
        let dyn_ = PairDynamics::new(&cfg, &InitialState::Case1, Engine::Sector).unwrap();
        assert!(dyn_.sample(&[0.0, 0.5, 0.5]).is_err());
    }
}
