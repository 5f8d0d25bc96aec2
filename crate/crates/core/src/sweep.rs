//! Parameter sweeps and the figure datasets, with CSV and JSON emission.

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::atom::{AtomState, TwoLevelAtom};
use crate::config::{Axis, MediumSpec, OutputFormat, Problem, RunConfig, Scale, SweepAxis};
use crate::error::{Error, Result};
use crate::halfspace::{surface_potential_lifshitz, surface_potential_qed};
use crate::media::{media_force, media_force_lifshitz_quadrature};
use crate::pair::pair_closed_nearzone;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default number of abscissae in a figure dataset.
pub const FIGURE_POINTS: usize = 1001;

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub axis: f64,
    pub values: Vec<Option<f64>>,
    pub flags: Vec<String>,
}

impl Row {
    pub fn is_skipped(&self) -> bool {
        self.flags.iter().any(|f| f.starts_with("skipped:"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub axis_name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
    pub metadata: Value,
    /// Some point failed to converge; the dataset is partial.
    pub nonconvergent: bool,
}

fn number(x: f64) -> String {
    // Collapse −0 so identical curves print identically.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.8e}")
}

impl SweepResult {
    pub fn skipped(&self) -> usize {
        self.rows.iter().filter(|r| r.is_skipped()).count()
    }

    /// Value of column `name` in every row, `None` where absent.
    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r.values[i]).collect())
    }

    pub fn axis_values(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.axis).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.axis_name);
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push_str(",flags\n");
        for r in &self.rows {
            out.push_str(&number(r.axis));
            for v in &r.values {
                out.push(',');
                if let Some(v) = v {
                    out.push_str(&number(*v));
                }
            }
            let _ = writeln!(out, ",{}", r.flags.join(";"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut row = vec![json!(r.axis)];
                row.extend(r.values.iter().map(|v| json!(v)));
                row.push(json!(r.flags.join(";")));
                Value::Array(row)
            })
            .collect();
        let doc = json!({ "metadata": self.metadata, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("dataset serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

/// Command-line style replacements for the sweep of a configuration.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SweepOverrides {
    pub points: Option<usize>,
    pub min: Option<f64>,
    pub max: Option<f64>,
}

impl SweepOverrides {
    fn is_empty(&self) -> bool {
        self.points.is_none() && self.min.is_none() && self.max.is_none()
    }

    pub fn apply(&self, cfg: &RunConfig) -> Result<RunConfig> {
        if self.is_empty() {
            return Ok(cfg.clone());
        }
        let s = cfg
            .sweep
            .ok_or_else(|| Error::schema("sweep", "--points/--min/--max need a sweep in the config"))?;
        let mut out = cfg.clone();
        out.sweep = Some(SweepAxis::new(
            s.axis,
            self.min.unwrap_or(s.min),
            self.max.unwrap_or(s.max),
            self.points.unwrap_or(s.points),
            s.scale,
        )?);
        Ok(out)
    }
}

pub fn columns(problem: Problem) -> [&'static str; 2] {
    match problem {
        Problem::Pair => ["shift", "half_width"],
        Problem::Surface | Problem::Media => ["qed", "lifshitz"],
        Problem::Lifshitz => ["lifshitz_quadrature", "lifshitz_closed"],
    }
}

fn axis_label(problem: Problem, axis: Axis) -> &'static str {
    match (axis, problem) {
        (Axis::Geometry, Problem::Pair) => "R",
        (Axis::Geometry, Problem::Surface) => "z0",
        (Axis::Geometry, _) => "L",
        (other, _) => other.name(),
    }
}

fn reason(e: &Error) -> &'static str {
    match e {
        Error::PoleOnAxis { .. } => "pole_on_axis",
        Error::WidthTooLarge { .. } => "width_too_large",
        Error::NotApplicable(_) => "not_applicable",
        Error::RegulatorTooLarge { .. } => "regulator_too_large",
        Error::QuadratureNonConvergent(_) => "nonconvergent",
        _ => "error",
    }
}

type Point = (Vec<Option<f64>>, Vec<String>);

/// Optional secondary value: point-local failures become a flag.
fn secondary(value: Result<f64>, column: &str, flags: &mut Vec<String>) -> Result<Option<f64>> {
    match value {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_point_local() => {
            flags.push(format!("{column}:{}", reason(&e)));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn evaluate(cfg: &RunConfig) -> Result<Point> {
    let mut flags = Vec::new();
    let values = match cfg.problem {
        Problem::Pair => {
            let r = pair_closed_nearzone(&cfg.pair_configuration(), cfg.geometry)?;
            if r.degenerate {
                return Err(Error::PoleOnAxis {
                    omega: cfg.atom_a.omega(),
                });
            }
            vec![Some(r.shift), Some(r.half_width)]
        }
        Problem::Surface => {
            let p = cfg.surface_problem()?;
            if p.is_degenerate() {
                return Err(Error::PoleOnAxis {
                    omega: cfg.atom_a.omega(),
                });
            }
            if p.beyond_printed_forms() {
                flags.push("beyond_printed_forms".to_string());
            }
            let lif = secondary(surface_potential_lifshitz(&p), "lifshitz", &mut flags)?;
            vec![Some(surface_potential_qed(&p)), lif]
        }
        Problem::Media => {
            let f = media_force(&cfg.slab_problem()?)?;
            vec![Some(f.qed), Some(f.lifshitz)]
        }
        Problem::Lifshitz => {
            let p = cfg.slab_problem()?;
            let quad = media_force_lifshitz_quadrature(&p)?;
            let closed = secondary(media_force(&p).map(|f| f.lifshitz), "lifshitz_closed", &mut flags)?;
            vec![Some(quad), closed]
        }
    };
    Ok((values, flags))
}

/// Evaluate a configuration over its sweep, or at its single geometry.
pub fn run_config(cfg: &RunConfig) -> Result<SweepResult> {
    let (axis, xs) = match &cfg.sweep {
        Some(s) => (s.axis, s.values()),
        None => (Axis::Geometry, vec![cfg.geometry]),
    };
    let cols = columns(cfg.problem);
    let mut rows = Vec::with_capacity(xs.len());
    let mut nonconvergent = false;
    for x in xs {
        let point = cfg.with_axis_value(axis, x)?;
        match evaluate(&point) {
            Ok((values, flags)) => rows.push(Row { axis: x, values, flags }),
            Err(e) if e.is_point_local() => {
                nonconvergent |= matches!(e, Error::QuadratureNonConvergent(_));
                rows.push(Row {
                    axis: x,
                    values: vec![None; cols.len()],
                    flags: vec![format!("skipped:{}", reason(&e))],
                });
            }
            Err(e) => return Err(e),
        }
    }
    let mut result = SweepResult {
        axis_name: axis_label(cfg.problem, axis).to_string(),
        columns: cols.iter().map(|c| c.to_string()).collect(),
        rows,
        metadata: Value::Null,
        nonconvergent,
    };
    result.metadata = json!({
        "config": cfg.to_value(),
        "version": VERSION,
        "units": "hbar = c = k_B = 1",
        "axis": result.axis_name,
        "columns": result.columns,
        "points": result.rows.len(),
        "skipped": result.skipped(),
    });
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig4a,
    Fig4b,
    Fig5,
    Fig6,
    Fig7,
    Fig7a,
    Fig7b,
}

impl Figure {
    pub const ALL: [Figure; 7] = [
        Figure::Fig4a,
        Figure::Fig4b,
        Figure::Fig5,
        Figure::Fig6,
        Figure::Fig7,
        Figure::Fig7a,
        Figure::Fig7b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig4a => "4a",
            Figure::Fig4b => "4b",
            Figure::Fig5 => "5",
            Figure::Fig6 => "6",
            Figure::Fig7 => "7",
            Figure::Fig7a => "7a",
            Figure::Fig7b => "7b",
        }
    }

    /// Temperature in units of ω_B for the fixed-temperature force figures.
    fn temperature(self) -> Option<f64> {
        match self {
            Figure::Fig4a => Some(0.1),
            Figure::Fig4b => Some(0.08),
            Figure::Fig5 => Some(0.3),
            _ => None,
        }
    }
}

impl std::str::FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFigure(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FigureOverrides {
    pub sweep: SweepOverrides,
    /// γ_B/ω_B, default 0.02.
    pub gamma_ratio: Option<f64>,
}

pub const DEFAULT_GAMMA_RATIO: f64 = 0.02;
/// ω_A/ω_B for the temperature sweep.
pub const FIG6_RATIO: f64 = 0.9;
pub const RATIO_RANGE: (f64, f64) = (0.5, 1.5);
pub const TEMPERATURE_RANGE: (f64, f64) = (0.001, 1.0);

/// Run configuration behind a figure, with ω_B = 1 so that frequencies and
/// temperatures are already in units of ω_B.
pub fn figure_config(which: Figure, overrides: &FigureOverrides) -> Result<RunConfig> {
    let gamma = overrides.gamma_ratio.unwrap_or(DEFAULT_GAMMA_RATIO);
    let atom_b = TwoLevelAtom::new(1.0, gamma, 1.0).map_err(|e| Error::schema("gamma_ratio", e.to_string()))?;
    let thermal = MediumSpec::Thermal {
        n_total: 1.0,
        temperature: None,
    };
    let (problem, state_a, medium_a, medium_b, temperature, omega_a, axis, range) = match which {
        Figure::Fig4a | Figure::Fig4b | Figure::Fig5 => (
            Problem::Media,
            AtomState::Ground,
            Some(thermal),
            Some(thermal),
            which.temperature(),
            1.0,
            Axis::OmegaA,
            RATIO_RANGE,
        ),
        Figure::Fig6 => (
            Problem::Media,
            AtomState::Ground,
            Some(thermal),
            Some(thermal),
            Some(TEMPERATURE_RANGE.1),
            FIG6_RATIO,
            Axis::Temperature,
            TEMPERATURE_RANGE,
        ),
        Figure::Fig7 | Figure::Fig7a | Figure::Fig7b => (
            Problem::Surface,
            AtomState::Excited,
            None,
            Some(MediumSpec::Densities { n_g: 1.0, n_e: 0.0 }),
            None,
            1.0,
            Axis::OmegaA,
            RATIO_RANGE,
        ),
    };
    let o = overrides.sweep;
    let sweep = SweepAxis::new(
        axis,
        o.min.unwrap_or(range.0),
        o.max.unwrap_or(range.1),
        o.points.unwrap_or(FIGURE_POINTS),
        Scale::Lin,
    )?;
    let mut text = json!({
        "problem": problem,
        "atom_a": TwoLevelAtom::new(omega_a, 0.0, 1.0)?,
        "atom_b": atom_b,
        "geometry": 1.0,
        "sweep": sweep,
    });
    let map = text.as_object_mut().expect("object");
    if problem == Problem::Surface {
        map.insert("state_a".into(), json!(state_a));
    }
    if let Some(m) = medium_a {
        map.insert("medium_a".into(), json!(m));
    }
    if let Some(m) = medium_b {
        map.insert("medium_b".into(), json!(m));
    }
    if let Some(t) = temperature {
        map.insert("temperature".into(), json!(t));
    }
    crate::config::parse_config(&text.to_string())
}

/// (π/9)·d2_A·d2_B·n_A·n_B / geometry³, the scale that makes figure
/// curves dimensionless.
fn normalization(cfg: &RunConfig) -> f64 {
    let n = |m: Option<MediumSpec>| match m {
        Some(MediumSpec::Densities { n_g, n_e }) => n_g + n_e,
        Some(MediumSpec::Thermal { n_total, .. }) => n_total,
        None => 1.0,
    };
    PI / 9.0 * cfg.atom_a.d2() * cfg.atom_b.d2() * n(cfg.medium_a) * n(cfg.medium_b) / cfg.geometry.powi(3)
}

pub fn figure_dataset(which: Figure, overrides: &FigureOverrides) -> Result<SweepResult> {
    let cfg = figure_config(which, overrides)?;
    let mut result = run_config(&cfg)?;
    let scale = normalization(&cfg);
    for r in &mut result.rows {
        for v in r.values.iter_mut().flatten() {
            *v /= scale;
        }
    }
    let keep: &[usize] = match which {
        Figure::Fig7a => &[0],
        Figure::Fig7b => &[1],
        _ => &[0, 1],
    };
    result.columns = keep.iter().map(|&i| result.columns[i].clone()).collect();
    for r in &mut result.rows {
        r.values = keep.iter().map(|&i| r.values[i]).collect();
    }
    result.axis_name = match which {
        Figure::Fig6 => "T/omega_b",
        _ => "omega_a/omega_b",
    }
    .to_string();

    let mut meta = json!({
        "figure": which.name(),
        "config": cfg.to_value(),
        "version": VERSION,
        "units": "hbar = c = k_B = 1, omega_b = 1",
        "normalization": "values divided by (pi/9) d2_a d2_b n_a n_b / geometry^3",
        "axis": result.axis_name,
        "columns": result.columns,
        "points": result.rows.len(),
        "skipped": result.skipped(),
        "gamma_ratio": cfg.atom_b.gamma(),
    });
    if let Some(t) = which.temperature() {
        meta["temperature_ratio"] = json!(t);
    }
    if which == Figure::Fig6 {
        meta["omega_ratio"] = json!(FIG6_RATIO);
    }
    if which == Figure::Fig7 {
        meta["peak_qed_to_lifshitz_ratio"] = json!(peak_ratio(&result));
    }
    result.metadata = meta;
    Ok(result)
}

/// Largest |first column| / |second column| over the rows where both exist.
pub fn peak_ratio(result: &SweepResult) -> Option<f64> {
    result
        .rows
        .iter()
        .filter_map(|r| match (r.values.first()?, r.values.get(1)?) {
            (Some(a), Some(b)) if *b != 0.0 => Some((a / b).abs()),
            _ => None,
        })
        .reduce(f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    const PAIR: &str = r#"{"problem": "pair",
        "atom_a": {"omega": 1.0, "gamma": 0.0, "d2": 1.0},
        "atom_b": {"omega": 0.9, "gamma": 0.02, "d2": 1.0},
        "state_a": "e", "state_b": "g", "geometry": 1.0,
        "sweep": {"axis": "geometry", "min": 0.5, "max": 5, "points": 10}}"#;

    #[test]
    fn pair_sweep_columns_and_values() {
        let r = run_config(&parse_config(PAIR).unwrap()).unwrap();
        assert_eq!(r.axis_name, "R");
        assert_eq!(r.columns, ["shift", "half_width"]);
        assert_eq!(r.rows.len(), 10);
        let at_one = r.rows.iter().find(|row| row.axis == 1.0).unwrap();
        assert!((at_one.values[0].unwrap() - 6.6007).abs() < 1e-4);
        let csv = r.to_csv();
        assert!(csv.starts_with("R,shift,half_width,flags\n"));
        assert!(csv.contains("\n1.00000000e0,6.60066007e0,6.60066007e-1,\n"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn single_point_without_sweep() {
        let mut v: Value = serde_json::from_str(PAIR).unwrap();
        v.as_object_mut().unwrap().remove("sweep");
        let r = run_config(&parse_config(&v.to_string()).unwrap()).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].axis, 1.0);
    }

    #[test]
    fn resonant_pole_rows_are_flagged() {
        let text = PAIR.replace(r#""gamma": 0.02"#, r#""gamma": 0.0"#).replace(
            r#""axis": "geometry", "min": 0.5, "max": 5, "points": 10"#,
            r#""axis": "omega_a", "min": 0.8, "max": 1.0, "points": 3"#,
        );
        let r = run_config(&parse_config(&text).unwrap()).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert_eq!(r.skipped(), 1);
        assert_eq!(r.rows[1].flags, ["skipped:pole_on_axis"]);
        assert!(r.to_csv().contains("\n9.00000000e-1,,,skipped:pole_on_axis\n"));
    }

    #[test]
    fn overrides_replace_sweep() {
        let cfg = parse_config(PAIR).unwrap();
        let o = SweepOverrides {
            points: Some(4),
            min: None,
            max: Some(2.0),
        };
        let c = o.apply(&cfg).unwrap();
        assert_eq!(c.sweep.unwrap().values(), vec![0.5, 1.0, 1.5, 2.0]);
        let bad = SweepOverrides {
            points: Some(1),
            ..Default::default()
        };
        assert!(bad.apply(&cfg).is_err());
    }

    #[test]
    fn unknown_figure() {
        assert!(matches!("8".parse::<Figure>(), Err(Error::UnknownFigure(_))));
        assert_eq!("7b".parse::<Figure>().unwrap(), Figure::Fig7b);
    }

    #[test]
    fn figure_five_point() {
        let r = figure_dataset(Figure::Fig5, &FigureOverrides::default()).unwrap();
        assert_eq!(r.rows.len(), FIGURE_POINTS);
        let row = r.rows.iter().find(|row| row.axis == 0.9).unwrap();
        assert!((row.values[0].unwrap() - 0.611734).abs() < 1e-6);
        assert!((row.values[1].unwrap() - 0.443563).abs() < 1e-6);
    }

    #[test]
    fn figure_seven_structure() {
        let r = figure_dataset(Figure::Fig7, &FigureOverrides::default()).unwrap();
        let at_one = r.rows.iter().find(|row| row.axis == 1.0).unwrap();
        assert_eq!(at_one.values[0], Some(0.0));
        assert!(r.rows.iter().all(|row| row.values[1].unwrap() > 0.0));
        let peak = peak_ratio(&r).unwrap();
        assert!(peak > 90.0 && peak < 110.0, "{peak}");
        let a = figure_dataset(Figure::Fig7a, &FigureOverrides::default()).unwrap();
        assert_eq!(a.columns, ["qed"]);
        let b = figure_dataset(Figure::Fig7b, &FigureOverrides::default()).unwrap();
        assert_eq!(b.columns, ["lifshitz"]);
    }

    #[test]
    fn figure_six_axis() {
        let o = FigureOverrides {
            sweep: SweepOverrides {
                points: Some(11),
                ..Default::default()
            },
            gamma_ratio: None,
        };
        let r = figure_dataset(Figure::Fig6, &o).unwrap();
        assert_eq!(r.axis_name, "T/omega_b");
        assert_eq!(r.rows.len(), 11);
        assert_eq!(r.rows[0].axis, 0.001);
        assert_eq!(r.rows[10].axis, 1.0);
    }

    #[test]
    fn zero_width_surface_figure_skips_resonance() {
        let o = FigureOverrides {
            sweep: SweepOverrides {
                points: Some(3),
                ..Default::default()
            },
            gamma_ratio: Some(0.0),
        };
        let r = figure_dataset(Figure::Fig7, &o).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert_eq!(r.skipped(), 1);
        assert!(r.rows[1].is_skipped());
    }

    #[test]
    fn json_layout() {
        let o = FigureOverrides {
            sweep: SweepOverrides {
                points: Some(3),
                ..Default::default()
            },
            gamma_ratio: None,
        };
        let r = figure_dataset(Figure::Fig4a, &o).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["metadata"]["figure"], "4a");
        assert_eq!(v["metadata"]["version"], VERSION);
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
        assert_eq!(v["rows"][0].as_array().unwrap().len(), 4);
    }
}
