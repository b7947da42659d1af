use std::path::{Path, PathBuf};

use spinstar_core::spinstar::{trajectory, Engine, InitialState, SpinStarConfig, ORACLE_MAX_BATH};

use crate::csv::trajectory_csv;
use crate::svg::{render, Curve};
use crate::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Svg,
}

/// One trajectory run, as given on the command line.
#[derive(Clone, Debug, PartialEq)]
pub struct RunSpec {
    pub engine: Engine,
    pub bath_size: usize,
    pub ratio: f64,
    pub alpha_a: f64,
    pub initial: InitialState,
    /// Grid end in `α_A t`.
    pub t_max: f64,
    pub steps: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunSpec {
    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(CliError::InvalidArgs(format!("--steps must be at least 2, got {}", self.steps)));
        }
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return Err(CliError::InvalidArgs(format!("--t-max must be positive, got {}", self.t_max)));
        }
        if self.engine == Engine::Oracle && self.bath_size > ORACLE_MAX_BATH {
            return Err(CliError::InvalidArgs(format!(
                "the oracle engine is limited to N <= {ORACLE_MAX_BATH}, got N = {}",
                self.bath_size
            )));
        }
        Ok(())
    }

    pub fn config(&self) -> Result<SpinStarConfig> {
        Ok(SpinStarConfig::with_ratio(self.bath_size, self.alpha_a, self.ratio)?)
    }
}

/// The file body a run produces.
pub fn render_sweep(spec: &RunSpec) -> Result<String> {
    spec.validate()?;
    let series = trajectory(&spec.config()?, &spec.initial, spec.t_max, spec.steps, spec.engine)?;
    Ok(match spec.format {
        Format::Csv => trajectory_csv(&series),
        Format::Svg => {
            let pick =
                |f: fn(&spinstar_core::spinstar::TrajectoryPoint) -> f64| series.iter().map(f).collect::<Vec<_>>();
            let conc = pick(|p| p.concurrence);
            let cxx = pick(|p| p.covariances.cov_xx);
            let cyy = pick(|p| p.covariances.cov_yy);
            let title = format!(
                "{} engine, {}, N = {}, r = {}",
                spec.engine.name(),
                spec.initial.name(),
                spec.bath_size,
                spec.ratio
            );
            let curves = [
                Curve { name: "concurrence", ys: &conc },
                Curve { name: "cov_xx", ys: &cxx },
                Curve { name: "cov_yy", ys: &cyy },
            ];
            render(&title, "α_A t", &series.grid, &curves)
        }
    })
}

/// Runs `spec` and writes the result to `spec.out`, or returns it for
/// standard output when no path is set.
pub fn run_sweep(spec: &RunSpec) -> Result<Option<String>> {
    let body = render_sweep(spec)?;
    match &spec.out {
        Some(path) => {
            write_file(path, &body)?;
            Ok(None)
        }
        None => Ok(Some(body)),
    }
}

fn write_file(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, body).map_err(|e| CliError::io(path.display(), e))
}
