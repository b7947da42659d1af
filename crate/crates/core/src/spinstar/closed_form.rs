//! Closed-form central-pair dynamics for the two preparations over the bath
//! ground state.
//!
//! Preparation 1 (`|+1, -1>` over `|N/2, -N/2>`) stays in a three-state
//! sector with one bright superposition oscillating at
//! `λ = 2 sqrt(N (1 + r²)) α_A`. Preparation 2 (`|+1, +1>`, with `α_A = α_B`)
//! is a three-level ladder through the symmetric one-flip state, oscillating
//! at `ω = 2 sqrt(6N - 4) α`.

use num_complex::Complex64 as C64;

use super::SpinStarConfig;
use crate::entanglement::XStateDensity;
use crate::{Error, Result};

/// Central-pair state of preparation 1 at one time. `a` vanishes and `c` is
/// real at all times.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormPoint {
    /// Dimensionless time `α_A t`.
    pub tau_a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
}

impl ClosedFormPoint {
    /// `a = 1 - b - d - e`, zero up to rounding.
    pub fn a(&self) -> f64 {
        1.0 - self.b - self.d - self.e
    }

    pub fn to_x_state(&self) -> Result<XStateDensity> {
        XStateDensity::new(0.0, self.b, C64::new(self.c, 0.0), self.d, self.e)
    }
}

/// `λ = 2 sqrt(N (1 + r²)) α_A`.
pub fn case1_frequency(cfg: &SpinStarConfig) -> f64 {
    let r = cfg.ratio();
    2.0 * (cfg.bath_size() as f64 * (1.0 + r * r)).sqrt() * cfg.alpha_a()
}

/// Preparation 1 at physical time `t`, with `x = cos λt`:
///
/// ```text
/// b = (x + r²)² / (1 + r²)²
/// c = -r (x + r²)(1 - x) / (1 + r²)²
/// d = r² (1 - x)² / (1 + r²)²
/// e = sin² λt / (1 + r²)
/// ```
pub fn closed_form_case1(cfg: &SpinStarConfig, t: f64) -> ClosedFormPoint {
    let r = cfg.ratio();
    let r2 = r * r;
    let phase = case1_frequency(cfg) * t;
    let x = phase.cos();
    let norm = (1.0 + r2) * (1.0 + r2);
    ClosedFormPoint {
        tau_a: cfg.alpha_a() * t,
        b: (x + r2).powi(2) / norm,
        c: -r * (x + r2) * (1.0 - x) / norm,
        d: r2 * (1.0 - x).powi(2) / norm,
        e: phase.sin().powi(2) / (1.0 + r2),
    }
}

/// `ω = 2 sqrt(6N - 4) α`.
pub fn case2_frequency(bath_size: usize, alpha: f64) -> f64 {
    2.0 * (6.0 * bath_size as f64 - 4.0).sqrt() * alpha
}

/// `C_xx(t) = N/(3N - 2) sin²(ωt)` for preparation 2 with `α_A = α_B = α`.
pub fn closed_form_case2_cov_xx(bath_size: usize, alpha: f64, t: f64) -> Result<f64> {
    if bath_size == 0 {
        return Err(Error::OutOfDomain("bath size must be at least 1".into()));
    }
    let n = bath_size as f64;
    Ok(n / (3.0 * n - 2.0) * (case2_frequency(bath_size, alpha) * t).sin().powi(2))
}

/// Full central-pair state of preparation 2 with `α_A = α_B = α`.
///
/// With `x = cos ωt` and `D = 3N - 2` the ladder amplitudes are
/// `(2(N-1) + N x)/D` on `|++>`, `-i sqrt(N/(2D)) sin ωt` on each of `|+->`
/// and `|-+>`, and `sqrt(2N(N-1)) (x - 1)/D` on `|-->`.
pub fn closed_form_case2(bath_size: usize, alpha: f64, t: f64) -> Result<XStateDensity> {
    if bath_size == 0 {
        return Err(Error::OutOfDomain("bath size must be at least 1".into()));
    }
    let n = bath_size as f64;
    let dd = 3.0 * n - 2.0;
    let phase = case2_frequency(bath_size, alpha) * t;
    let x = phase.cos();
    let top = (2.0 * (n - 1.0) + n * x) / dd;
    let one_flip = n * phase.sin().powi(2) / (2.0 * dd);
    let bottom = 2.0 * n * (n - 1.0) * (1.0 - x).powi(2) / (dd * dd);
    XStateDensity::new(top * top, one_flip, C64::new(one_flip, 0.0), one_flip, bottom)
}

fn check_fn_domain(bath_size: usize, x: f64) -> Result<()> {
    if bath_size < 2 {
        return Err(Error::OutOfDomain(format!("f_N needs N >= 2, got {bath_size}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::OutOfDomain(format!("f_N needs x in [-1, 1], got {x}")));
    }
    Ok(())
}

fn fn_polynomial(n: f64, x: f64, linear_sign: f64) -> f64 {
    let s = (2.0 * n * (n - 1.0)).sqrt();
    let dd = 3.0 * n - 2.0;
    let quad = 2.0 * n * s - n * dd;
    let lin = linear_sign * 2.0 * (n - 2.0) * s;
    let cons = n * dd - 4.0 * (n - 1.0) * s;
    (quad * x * x + lin * x + cons) / (dd * dd)
}

/// `f_N(x) = 2(|c| - sqrt(a e))` for preparation 2, as a polynomial in
/// `x = cos ωt`:
///
/// ```text
/// [(2N s - N(3N-2)) x² + 2(N-2) s x + N(3N-2) - 4(N-1) s] / (3N-2)²,  s = sqrt(2N(N-1))
/// ```
///
/// `f_N(1) = 0` and `f_N <= 0` on `[-1, 1]`.
pub fn f_n(bath_size: usize, x: f64) -> Result<f64> {
    check_fn_domain(bath_size, x)?;
    Ok(fn_polynomial(bath_size as f64, x, 1.0))
}

/// The same polynomial with the linear coefficient negated, as it circulates
/// in print. Kept for quantitative comparison only: it has `f_N(1) != 0` for
/// `N > 2`, which contradicts the product state at `t = 0`.
pub fn f_n_printed(bath_size: usize, x: f64) -> Result<f64> {
    check_fn_domain(bath_size, x)?;
    Ok(fn_polynomial(bath_size as f64, x, -1.0))
}

/// `max{0, f_N(cos ωt)}`, identically zero.
pub fn concurrence_case2(bath_size: usize, alpha: f64, t: f64) -> Result<f64> {
    let x = (case2_frequency(bath_size, alpha) * t).cos().clamp(-1.0, 1.0);
    Ok(f_n(bath_size, x)?.max(0.0))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::entanglement::concurrence_x;

    #[test]
    fn case1_starts_in_product_state() {
        let cfg = SpinStarConfig::with_ratio(7, 1.3, 0.2).unwrap();
        let p = closed_form_case1(&cfg, 0.0);
        assert_eq!((p.b, p.c, p.d, p.e), (1.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn case1_full_exchange_at_half_period() {
        let cfg = SpinStarConfig::with_ratio(100, 1.0, 1.0).unwrap();
        let p = closed_form_case1(&cfg, PI / case1_frequency(&cfg));
        assert!(p.b.abs() < 1e-15 && p.c.abs() < 1e-15 && (p.d - 1.0).abs() < 1e-15 && p.e.abs() < 1e-15);
    }

    #[test]
    fn case1_quarter_period() {
        let cfg = SpinStarConfig::with_ratio(9, 1.0, 1.0).unwrap();
        let p = closed_form_case1(&cfg, 0.5 * PI / case1_frequency(&cfg));
        for (got, want) in [(p.b, 0.25), (p.d, 0.25), (p.e, 0.5), (p.c, -0.25)] {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn case1_populations_sum_to_one() {
        let cfg = SpinStarConfig::with_ratio(5, 1.0, 3.7).unwrap();
        for k in 0..100 {
            let p = closed_form_case1(&cfg, 0.013 * k as f64);
            assert!(p.a().abs() < 1e-14);
            assert!(p.to_x_state().is_ok());
        }
    }

    #[test]
    fn case2_covariance() {
        assert_eq!(closed_form_case2_cov_xx(5, 1.0, 0.0).unwrap(), 0.0);
        let t = 0.5 * PI / case2_frequency(100, 1.0);
        assert!((closed_form_case2_cov_xx(100, 1.0, t).unwrap() - 100.0 / 298.0).abs() < 1e-15);
    }

    #[test]
    fn case2_state_is_consistent() {
        for n in [1, 2, 3, 10, 100] {
            for k in 0..50 {
                let t = 0.021 * k as f64;
                let x = closed_form_case2(n, 1.0, t).unwrap();
                let cov = 2.0 * x.c().re;
                assert!((cov - closed_form_case2_cov_xx(n, 1.0, t).unwrap()).abs() < 1e-14);
                if n >= 2 {
                    assert!(concurrence_x(&x) <= 1e-15);
                    let phase = (case2_frequency(n, 1.0) * t).cos();
                    let branch = 2.0 * (x.c().norm() - (x.a() * x.e()).sqrt());
                    assert!((branch - f_n(n, phase).unwrap()).abs() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn f_n_boundary_and_sign() {
        for n in 2..200 {
            assert!(f_n(n, 1.0).unwrap().abs() < 1e-13, "N = {n}");
            for k in 0..=400 {
                let x = -1.0 + k as f64 / 200.0;
                assert!(f_n(n, x).unwrap() <= 1e-13);
            }
        }
        for k in 0..=20 {
            assert!(f_n(2, -1.0 + k as f64 / 10.0).unwrap().abs() < 1e-15);
        }
        assert!(f_n_printed(6, 1.0).unwrap() < -0.4);
    }

    #[test]
    fn f_n_domain() {
        assert!(f_n(1, 0.0).is_err());
        assert!(f_n(4, 1.5).is_err());
        assert!(f_n_printed(4, -1.01).is_err());
    }

    #[test]
    fn case2_concurrence_vanishes() {
        for n in [2, 5, 100] {
            for k in 0..100 {
                assert!(concurrence_case2(n, 1.0, 0.01 * k as f64).unwrap() <= 1e-15);
            }
        }
    }
}
