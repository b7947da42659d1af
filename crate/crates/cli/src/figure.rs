//! Data behind the three reference figures: concurrence, populations and
//! covariances against `α_A t` for a bath of 100 spins.
//!
//! Along with the sampled curves, every interior extremum of a plotted curve
//! is refined off the grid by golden-section search. A 2000-point grid places
//! peaks only to within about `1e-5` in value; the refined table pins them
//! to rounding.

use std::path::{Path, PathBuf};

use spinstar_core::spinstar::{
    grid_extrema, refine_extremum, uniform_grid, Engine, Extremum, InitialState, PairDynamics, SpinStarConfig,
    TrajectoryPoint,
};

use crate::csv::{format_number, records, Table};
use crate::svg::{render, Curve};
use crate::{CliError, Result};

pub const DEFAULT_BATH: usize = 100;
pub const DEFAULT_STEPS: usize = 2000;
pub const DEFAULT_T_MAX: f64 = 1.0;

const EXTREMA_HEADER: [&str; 4] = ["curve", "kind", "tau_a", "value"];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FigureSpec {
    pub which: u8,
    pub bath_size: usize,
    pub t_max: f64,
    pub steps: usize,
}

impl FigureSpec {
    pub fn new(which: u8) -> Result<Self> {
        if !(1..=3).contains(&which) {
            return Err(CliError::InvalidArgs(format!("figure must be 1, 2 or 3, got {which}")));
        }
        Ok(Self { which, bath_size: DEFAULT_BATH, t_max: DEFAULT_T_MAX, steps: DEFAULT_STEPS })
    }
}

/// A refined stationary point of one curve.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremumRow {
    pub curve: String,
    pub kind: Extremum,
    pub tau_a: f64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureData {
    pub which: u8,
    pub title: String,
    /// `tau_a` first, then one column per curve (plotted or auxiliary).
    pub table: Table,
    pub plotted: Vec<String>,
    pub extrema: Vec<ExtremumRow>,
}

impl FigureData {
    pub fn extrema_csv(&self) -> String {
        let header = EXTREMA_HEADER.map(str::to_owned);
        let rows = self
            .extrema
            .iter()
            .map(|e| [e.curve.clone(), e.kind.name().into(), format_number(e.tau_a), format_number(e.value)]);
        records(std::iter::once(header).chain(rows))
    }

    pub fn svg(&self) -> String {
        let xs = self.table.column("tau_a").expect("tau_a column");
        let curves: Vec<Curve<'_>> = self
            .plotted
            .iter()
            .map(|name| Curve { name, ys: self.table.column(name).expect("plotted column") })
            .collect();
        render(&self.title, "α_A t", xs, &curves)
    }

    pub fn extrema_of<'a>(&'a self, curve: &'a str, kind: Extremum) -> impl Iterator<Item = &'a ExtremumRow> + 'a {
        self.extrema.iter().filter(move |e| e.curve == curve && e.kind == kind)
    }
}

/// Reads back a file written by [`FigureData::extrema_csv`].
pub fn parse_extrema(text: &str) -> Option<Vec<ExtremumRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    if reader.headers().ok()?.iter().ne(EXTREMA_HEADER) {
        return None;
    }
    reader
        .records()
        .map(|record| {
            let record = record.ok()?;
            let kind = match record.get(1)? {
                "max" => Extremum::Max,
                "min" => Extremum::Min,
                _ => return None,
            };
            Some(ExtremumRow {
                curve: record.get(0)?.to_owned(),
                kind,
                tau_a: record.get(2)?.parse().ok()?,
                value: record.get(3)?.parse().ok()?,
            })
        })
        .collect()
}

type Extract = fn(&TrajectoryPoint) -> f64;

struct CurveDef {
    name: String,
    source: usize,
    extract: Extract,
    plotted: bool,
}

fn concurrence(p: &TrajectoryPoint) -> f64 {
    p.concurrence
}

fn population_b(p: &TrajectoryPoint) -> f64 {
    p.state.b()
}

fn population_d(p: &TrajectoryPoint) -> f64 {
    p.state.d()
}

fn population_e(p: &TrajectoryPoint) -> f64 {
    p.state.e()
}

fn purity(p: &TrajectoryPoint) -> f64 {
    p.state.purity()
}

fn cov_xx(p: &TrajectoryPoint) -> f64 {
    p.covariances.cov_xx
}

fn ratio_label(r: f64) -> String {
    format!("concurrence_r{}", format_number(r))
}

pub fn compute_figure(spec: &FigureSpec) -> Result<FigureData> {
    let n = spec.bath_size;
    let curve =
        |name: &str, source, extract: Extract, plotted| CurveDef { name: name.into(), source, extract, plotted };
    let (title, sources, curves) = match spec.which {
        1 => {
            let ratios = [0.1, 1.0, 10.0];
            let sources = ratios
                .iter()
                .map(|&r| Ok((SpinStarConfig::with_ratio(n, 1.0, r)?, InitialState::Case1, Engine::ClosedForm)))
                .collect::<Result<Vec<_>>>()?;
            let curves =
                ratios.iter().enumerate().map(|(i, &r)| curve(&ratio_label(r), i, concurrence, true)).collect();
            (format!("Concurrence, |+1,-1> over the bath ground state, N = {n}"), sources, curves)
        }
        2 => {
            let sources = vec![(SpinStarConfig::with_ratio(n, 1.0, 1.0)?, InitialState::Case1, Engine::ClosedForm)];
            let curves = vec![
                curve("concurrence", 0, concurrence, true),
                curve("b", 0, population_b, true),
                curve("d", 0, population_d, true),
                curve("e", 0, population_e, false),
                curve("purity", 0, purity, false),
            ];
            (format!("Concurrence and populations, r = 1, N = {n}"), sources, curves)
        }
        3 => {
            let sources = vec![(SpinStarConfig::with_ratio(n, 1.0, 10.0)?, InitialState::Case2, Engine::Sector)];
            let curves = vec![curve("cov_xx", 0, cov_xx, true), curve("concurrence", 0, concurrence, true)];
            (format!("σx covariance and concurrence, |+1,+1>, r = 10, N = {n}"), sources, curves)
        }
        w => return Err(CliError::InvalidArgs(format!("figure must be 1, 2 or 3, got {w}"))),
    };

    let grid = uniform_grid(spec.t_max, spec.steps)?;
    let dynamics = sources
        .iter()
        .map(|(cfg, initial, engine)| PairDynamics::new(cfg, initial, *engine))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let series = dynamics.iter().map(|d| d.sample(&grid)).collect::<std::result::Result<Vec<_>, _>>()?;

    let mut header = vec!["tau_a".to_owned()];
    let mut columns = vec![grid.clone()];
    let mut extrema = Vec::new();
    for c in &curves {
        let values: Vec<f64> = series[c.source].iter().map(c.extract).collect();
        if c.plotted {
            let dyn_ = &dynamics[c.source];
            for kind in [Extremum::Max, Extremum::Min] {
                for k in grid_extrema(&values, kind) {
                    let f = |t: f64| Ok((c.extract)(&dyn_.point_at(t)?));
                    let (tau_a, value) = refine_extremum(f, grid[k - 1], grid[k + 1], kind)?;
                    extrema.push(ExtremumRow { curve: c.name.clone(), kind, tau_a, value });
                }
            }
        }
        header.push(c.name.clone());
        columns.push(values);
    }
    extrema
        .sort_by(|a, b| a.curve.cmp(&b.curve).then(a.kind.name().cmp(b.kind.name())).then(a.tau_a.total_cmp(&b.tau_a)));

    Ok(FigureData {
        which: spec.which,
        title,
        table: Table { header, columns },
        plotted: curves.iter().filter(|c| c.plotted).map(|c| c.name.clone()).collect(),
        extrema,
    })
}

/// Writes `figureN.csv`, `figureN_extrema.csv` and, if asked, `figureN.svg`
/// into `dir`. Returns the paths written.
pub fn run_figure(spec: &FigureSpec, dir: &Path, svg: bool) -> Result<Vec<PathBuf>> {
    let data = compute_figure(spec)?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir.display(), e))?;
    let stem = format!("figure{}", spec.which);
    let mut outputs = vec![
        (dir.join(format!("{stem}.csv")), data.table.to_csv()),
        (dir.join(format!("{stem}_extrema.csv")), data.extrema_csv()),
    ];
    if svg {
        outputs.push((dir.join(format!("{stem}.svg")), data.svg()));
    }
    for (path, body) in &outputs {
        std::fs::write(path, body).map_err(|e| CliError::io(path.display(), e))?;
    }
    Ok(outputs.into_iter().map(|(p, _)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(which: u8) -> FigureSpec {
        FigureSpec { steps: 200, ..FigureSpec::new(which).unwrap() }
    }

    #[test]
    fn rejects_unknown_figure() {
        assert!(FigureSpec::new(4).is_err());
    }

    #[test]
    fn figure1_columns() {
        let data = compute_figure(&small(1)).unwrap();
        assert_eq!(data.table.header, ["tau_a", "concurrence_r0.1", "concurrence_r1", "concurrence_r10"]);
        assert_eq!(data.table.columns[0].len(), 200);
        assert!(data.extrema_of("concurrence_r1", Extremum::Max).count() > 3);
        let back = parse_extrema(&data.extrema_csv()).unwrap();
        assert_eq!(back.len(), data.extrema.len());
        assert_eq!(back[0].curve, data.extrema[0].curve);
        assert!(parse_extrema("x\n").is_none());
        assert!(data.extrema_csv().starts_with("curve,kind,tau_a,value\n"));
    }

    #[test]
    fn figure2_keeps_aux_columns_out_of_the_plot() {
        let data = compute_figure(&small(2)).unwrap();
        assert_eq!(data.plotted, ["concurrence", "b", "d"]);
        assert!(data.table.column("purity").is_some());
        assert_eq!(data.svg().matches("<polyline").count(), 3);
    }
}
