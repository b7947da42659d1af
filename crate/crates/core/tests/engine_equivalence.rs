//! The full-register oracle against the closed forms and the sector engine.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use spinstar_core::entanglement::{
    concurrence_x, covariance_pair_x, x_state_to_matrix, TwoQubitDensity, XStateDensity,
};
use spinstar_core::qcore::{density_from_ket, partial_trace_to_pair, Spin};
use spinstar_core::spinstar::{
    bath_j_squared, case1_frequency, case2_frequency, closed_form_case1, closed_form_case2, closed_form_case2_cov_xx,
    f_n, reduce_sector_to_pair, sector_evolve, total_sz, trajectory, CoupledBasisLabel, Engine, InitialState, Oracle,
    SpinStarConfig, SITE_A, SITE_B,
};

const RATIOS: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 10.0];

fn times(count: usize, tau_max: f64) -> impl Iterator<Item = f64> {
    (0..count).map(move |k| tau_max * k as f64 / (count - 1) as f64)
}

fn sector_pair(cfg: &SpinStarConfig, initial: &InitialState, t: f64) -> XStateDensity {
    let (sa, sb) = initial.central_pair_over_ground_bath(cfg).unwrap();
    let label = CoupledBasisLabel::over_ground_bath(cfg.bath_size(), sa, sb);
    reduce_sector_to_pair(&sector_evolve(cfg, &label, t).unwrap()).unwrap()
}

#[test]
fn closed_form_case1_matches_oracle() {
    for n in 2..=8 {
        for r in RATIOS {
            let cfg = SpinStarConfig::with_ratio(n, 1.0, r).unwrap();
            let oracle = Oracle::new(&cfg).unwrap();
            let run = oracle.prepare(&InitialState::Case1).unwrap();
            for t in times(50, 2.0) {
                let want = closed_form_case1(&cfg, t).to_x_state().unwrap();
                let got = run.pair_at(t).unwrap();
                assert!(got.max_deviation(&want) <= 1e-9, "N={n} r={r} t={t}: {got:?} vs {want:?}");
            }
        }
    }
}

#[test]
fn sector_matches_oracle_for_both_preparations() {
    for n in [1, 2, 3, 5, 8] {
        for r in RATIOS {
            let cfg = SpinStarConfig::with_ratio(n, 0.7, r).unwrap();
            let oracle = Oracle::new(&cfg).unwrap();
            for initial in [InitialState::Case1, InitialState::Case2] {
                let run = oracle.prepare(&initial).unwrap();
                for t in times(50, 2.0) {
                    let got = sector_pair(&cfg, &initial, t);
                    let want = run.pair_at(t).unwrap();
                    assert!(got.max_deviation(&want) <= 1e-9, "N={n} r={r} {} t={t}", initial.name());
                }
            }
        }
    }
}

#[test]
fn case2_closed_form_matches_oracle() {
    for n in [2, 4, 6, 8] {
        let cfg = SpinStarConfig::new(n, 1.3, 1.3).unwrap();
        let oracle = Oracle::new(&cfg).unwrap();
        let run = oracle.prepare(&InitialState::Case2).unwrap();
        for t in times(60, 1.0) {
            let got = run.pair_at(t).unwrap();
            let cov = covariance_pair_x(&got).cov_xx;
            assert!((cov - closed_form_case2_cov_xx(n, 1.3, t).unwrap()).abs() <= 1e-9);
            assert!(got.max_deviation(&closed_form_case2(n, 1.3, t).unwrap()) <= 1e-9);
            assert!(concurrence_x(&got) <= 1e-9);
            let x = (case2_frequency(n, 1.3) * t).cos().clamp(-1.0, 1.0);
            let branch = 2.0 * (got.c().norm() - (got.a() * got.e()).sqrt());
            assert!((branch - f_n(n, x).unwrap()).abs() <= 1e-9);
        }
    }
}

#[test]
fn engines_agree_through_trajectory() {
    let cfg = SpinStarConfig::with_ratio(5, 1.0, 2.0).unwrap();
    let runs: Vec<_> = [Engine::ClosedForm, Engine::Sector, Engine::Oracle]
        .into_iter()
        .map(|e| trajectory(&cfg, &InitialState::Case1, 1.5, 40, e).unwrap())
        .collect();
    for k in 0..40 {
        let p = runs[0].points[k];
        for other in &runs[1..] {
            let q = other.points[k];
            assert_eq!(p.tau_a, q.tau_a);
            assert!(p.state.max_deviation(&q.state) <= 1e-9);
            assert!((p.concurrence - q.concurrence).abs() <= 1e-9);
            assert!((p.covariances.cov_yy - q.covariances.cov_yy).abs() <= 1e-9);
        }
    }
}

#[test]
fn oracle_conserves_charges() {
    for (n, r) in [(3, 0.5), (6, 2.0), (8, 1.0)] {
        let cfg = SpinStarConfig::with_ratio(n, 1.0, r).unwrap();
        let oracle = Oracle::new(&cfg).unwrap();
        let (sz, j2) = (total_sz(&cfg).unwrap(), bath_j_squared(&cfg).unwrap());
        for initial in [InitialState::Case1, InitialState::Case2] {
            let run = oracle.prepare(&initial).unwrap();
            let ket0 = run.ket_at(0.0);
            let probe = |psi: &spinstar_core::qcore::StateVector| {
                [
                    sz.expectation(psi.amplitudes()).unwrap().re,
                    j2.expectation(psi.amplitudes()).unwrap().re,
                    oracle.energy(psi).unwrap(),
                ]
            };
            let start = probe(&ket0);
            assert!((start[1] - 0.5 * n as f64 * (0.5 * n as f64 + 1.0)).abs() < 1e-12);
            for t in times(30, 3.0) {
                let now = probe(&run.ket_at(t));
                for (a, b) in start.iter().zip(now) {
                    assert!((a - b).abs() <= 1e-9, "N={n} t={t}");
                }
            }
        }
    }
}

#[test]
fn ket_route_matches_density_route() {
    let cfg = SpinStarConfig::with_ratio(4, 1.0, 0.5).unwrap();
    let oracle = Oracle::new(&cfg).unwrap();
    let run = oracle.prepare(&InitialState::Case1).unwrap();
    for t in times(7, 1.0) {
        let psi = run.ket_at(t);
        let via_rho = partial_trace_to_pair(&density_from_ket(&psi).unwrap(), SITE_A, SITE_B, cfg.num_spins()).unwrap();
        assert!((&via_rho - &oracle.pair_matrix(&psi).unwrap()).max_abs() < 1e-15);
    }
}

#[test]
fn case1_structure() {
    for r in RATIOS {
        let cfg = SpinStarConfig::with_ratio(100, 1.0, r).unwrap();
        let ts = trajectory(&cfg, &InitialState::Case1, 1.0, 300, Engine::Sector).unwrap();
        for p in ts.iter() {
            assert!(p.state.a().abs() < 1e-12);
            assert!(p.state.c().im.abs() < 1e-12);
            let two_c = 2.0 * p.state.c().norm();
            assert!((p.concurrence - two_c).abs() < 1e-12);
            assert!((p.concurrence - p.covariances.cov_xx.abs()).abs() < 1e-12);
        }
    }
}

#[test]
fn r1_saturates_positivity_and_is_pure_at_nodes() {
    let cfg = SpinStarConfig::with_ratio(100, 1.0, 1.0).unwrap();
    let lambda = case1_frequency(&cfg);
    for k in 0..200 {
        let t = 0.005 * k as f64;
        let p = closed_form_case1(&cfg, t);
        assert!((p.c.abs() - (p.b * p.d).sqrt()).abs() < 1e-15);
        let x = p.to_x_state().unwrap();
        assert!((concurrence_x(&x) - 0.5 * (lambda * t).sin().powi(2)).abs() < 1e-15);
    }
    for m in 0..6 {
        let x = closed_form_case1(&cfg, m as f64 * PI / lambda).to_x_state().unwrap();
        assert!(concurrence_x(&x) < 1e-12 && x.e() < 1e-12);
        assert!(x.purity() >= 1.0 - 1e-9);
    }
}

#[test]
fn exchanging_the_central_spins_swaps_b_and_d() {
    // mirror image of case 1: A and B trade couplings and initial spins
    for (n, r) in [(3, 0.1), (5, 2.0), (6, 10.0)] {
        let cfg = SpinStarConfig::with_ratio(n, 1.0, r).unwrap();
        let mirrored = cfg.swapped();
        let mut spins = vec![Spin::Down, Spin::Up];
        spins.extend(std::iter::repeat_n(Spin::Down, n));
        let mirror_run = Oracle::new(&mirrored).unwrap();
        let mirror_run = mirror_run.prepare(&InitialState::Product(spins)).unwrap();
        for t in times(25, 1.0) {
            let p = closed_form_case1(&cfg, t);
            let q = mirror_run.pair_at(t).unwrap();
            assert!((q.b() - p.d).abs() < 1e-9 && (q.d() - p.b).abs() < 1e-9 && (q.e() - p.e).abs() < 1e-9);
            assert!((q.c() - C64::new(p.c, 0.0).conj()).norm() < 1e-9);
        }
    }
}

#[test]
fn case1_is_periodic() {
    for r in RATIOS {
        let cfg = SpinStarConfig::with_ratio(17, 0.8, r).unwrap();
        let period = 2.0 * PI / case1_frequency(&cfg);
        for k in 0..40 {
            let t = 0.037 * k as f64;
            let (p, q) = (closed_form_case1(&cfg, t), closed_form_case1(&cfg, t + 3.0 * period));
            for (a, b) in [(p.b, q.b), (p.c, q.c), (p.d, q.d), (p.e, q.e)] {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn case2_is_classical_at_large_bath() {
    let n = 100;
    let cfg = SpinStarConfig::new(n, 1.0, 1.0).unwrap();
    let ts = trajectory(&cfg, &InitialState::Case2, 1.0, 2000, Engine::Sector).unwrap();
    let peak_cov = ts.iter().map(|p| p.covariances.cov_xx).fold(0.0, f64::max);
    assert!(ts.iter().all(|p| p.concurrence <= 1e-12));
    assert!(peak_cov > 1.0 / 3.0);
    assert!(peak_cov <= n as f64 / (3.0 * n as f64 - 2.0) + 1e-12);
}

#[test]
fn x_state_round_trips_through_the_validator() {
    let cfg = SpinStarConfig::with_ratio(2, 1.0, 3.0).unwrap();
    for t in times(20, 2.0) {
        let x = sector_pair(&cfg, &InitialState::Case2, t);
        assert!(TwoQubitDensity::new(x_state_to_matrix(&x).into_matrix()).is_ok());
    }
}
