//! JSON run configuration.
//!
//! ```json
//! {"problem": "pair", "atom_a": {"omega": 1.0, "gamma": 0.0, "d2": 1.0},
//!  "atom_b": {"omega": 0.9, "gamma": 0.02, "d2": 1.0},
//!  "state_a": "e", "state_b": "g", "geometry": 1.0,
//!  "sweep": {"axis": "geometry", "min": 0.5, "max": 5, "points": 10, "scale": "lin"},
//!  "output": "csv"}
//! ```
//!
//! Unknown keys, and keys that the selected problem does not use, are
//! rejected.

use serde::{Deserialize, Serialize};
use serde_json::error::Category;

use crate::atom::{AtomState, MediumState, PairConfiguration, TwoLevelAtom};
use crate::error::{Error, Result};
use crate::halfspace::SurfaceProblem;
use crate::media::{boltzmann_populations, SlabProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Pair,
    Surface,
    Media,
    Lifshitz,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Pair => "pair",
            Problem::Surface => "surface",
            Problem::Media => "media",
            Problem::Lifshitz => "lifshitz",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    #[default]
    Lin,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    Geometry,
    OmegaA,
    OmegaB,
    GammaB,
    Temperature,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Geometry => "geometry",
            Axis::OmegaA => "omega_a",
            Axis::OmegaB => "omega_b",
            Axis::GammaB => "gamma_b",
            Axis::Temperature => "temperature",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepAxis {
    pub axis: Axis,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    #[serde(default)]
    pub scale: Scale,
}

impl SweepAxis {
    pub fn new(axis: Axis, min: f64, max: f64, points: usize, scale: Scale) -> Result<Self> {
        let s = Self {
            axis,
            min,
            max,
            points,
            scale,
        };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::schema("sweep.points", "point count must be >= 2"));
        }
        if !self.min.is_finite() || !self.max.is_finite() {
            return Err(Error::schema("sweep", "bounds must be finite"));
        }
        if self.min >= self.max {
            return Err(Error::schema("sweep", "min must be < max"));
        }
        if self.scale == Scale::Log && self.min <= 0.0 {
            return Err(Error::schema("sweep.min", "log scale needs min > 0"));
        }
        let lower = match self.axis {
            Axis::GammaB => 0.0,
            _ => f64::MIN_POSITIVE,
        };
        if self.min < lower {
            return Err(Error::schema(
                "sweep.min",
                format!("axis `{}` must stay positive", self.axis.name()),
            ));
        }
        Ok(())
    }

    /// Abscissae in ascending order; both bounds are hit exactly.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i == n - 1 {
                    return self.max;
                }
                let t = i as f64 / last;
                match self.scale {
                    Scale::Lin => self.min + (self.max - self.min) * t,
                    Scale::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

/// Populations of a medium: given directly, or thermal at a temperature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum MediumSpec {
    Densities {
        n_g: f64,
        n_e: f64,
    },
    Thermal {
        n_total: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        temperature: Option<f64>,
    },
}

impl MediumSpec {
    fn is_thermal(&self) -> bool {
        matches!(self, MediumSpec::Thermal { .. })
    }

    fn resolve(&self, species: TwoLevelAtom, default_temperature: Option<f64>, path: &str) -> Result<MediumState> {
        let res = match *self {
            MediumSpec::Densities { n_g, n_e } => MediumState::new(species, n_g, n_e),
            MediumSpec::Thermal { n_total, temperature } => {
                let t = temperature.or(default_temperature).ok_or_else(|| {
                    Error::schema(
                        format!("{path}.temperature"),
                        "thermal medium needs a temperature (inline or top-level)",
                    )
                })?;
                boltzmann_populations(species, n_total, t)
            }
        };
        res.map_err(|e| match e {
            Error::Schema { .. } => e,
            other => Error::schema(path, other.to_string()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    problem: Problem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    atom_a: Option<TwoLevelAtom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    atom_b: Option<TwoLevelAtom>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    state_a: Option<AtomState>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    state_b: Option<AtomState>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    medium_a: Option<MediumSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    medium_b: Option<MediumSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    temperature: Option<f64>,
    geometry: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sweep: Option<SweepAxis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    output: Option<OutputFormat>,
}

/// A fully validated run description with all defaults filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: Problem,
    pub atom_a: TwoLevelAtom,
    pub atom_b: TwoLevelAtom,
    /// Level of atom A; meaningful for `pair` and `surface`.
    pub state_a: AtomState,
    /// Level of atom B; meaningful for `pair` only.
    pub state_b: AtomState,
    pub medium_a: Option<MediumSpec>,
    pub medium_b: Option<MediumSpec>,
    pub temperature: Option<f64>,
    pub geometry: f64,
    pub sweep: Option<SweepAxis>,
    pub output: OutputFormat,
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        match inner.classify() {
            Category::Data => Error::schema(path, strip_position(&inner)),
            _ => Error::Parse(inner.to_string()),
        }
    })?;
    de.end().map_err(|e| Error::Parse(e.to_string()))?;
    RunConfig::from_raw(raw)
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.find(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

fn forbid<T>(value: &Option<T>, key: &str, problem: Problem) -> Result<()> {
    if value.is_some() {
        return Err(Error::schema(
            key,
            format!("key is not used by problem `{}`", problem.name()),
        ));
    }
    Ok(())
}

fn require<T: Copy>(value: Option<T>, key: &str) -> Result<T> {
    value.ok_or_else(|| Error::schema(key, "missing required key"))
}

impl RunConfig {
    fn from_raw(raw: RawConfig) -> Result<Self> {
        let problem = raw.problem;
        if !(raw.geometry.is_finite() && raw.geometry > 0.0) {
            return Err(Error::schema("geometry", "geometry must be > 0"));
        }
        let atom_a = require(raw.atom_a, "atom_a")?;
        let atom_b = require(raw.atom_b, "atom_b")?;
        match problem {
            Problem::Pair => {
                forbid(&raw.medium_a, "medium_a", problem)?;
                forbid(&raw.medium_b, "medium_b", problem)?;
                forbid(&raw.temperature, "temperature", problem)?;
            }
            Problem::Surface => {
                forbid(&raw.state_b, "state_b", problem)?;
                forbid(&raw.medium_a, "medium_a", problem)?;
                require(raw.medium_b, "medium_b")?;
            }
            Problem::Media | Problem::Lifshitz => {
                forbid(&raw.state_a, "state_a", problem)?;
                forbid(&raw.state_b, "state_b", problem)?;
                require(raw.medium_a, "medium_a")?;
                require(raw.medium_b, "medium_b")?;
            }
        }
        if let Some(t) = raw.temperature {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::schema("temperature", "temperature must be > 0"));
            }
        }
        if let Some(s) = &raw.sweep {
            s.validate()?;
        }
        let cfg = RunConfig {
            problem,
            atom_a,
            atom_b,
            state_a: raw.state_a.unwrap_or(AtomState::Ground),
            state_b: raw.state_b.unwrap_or(AtomState::Ground),
            medium_a: raw.medium_a,
            medium_b: raw.medium_b,
            temperature: raw.temperature,
            geometry: raw.geometry,
            sweep: raw.sweep,
            output: raw.output.unwrap_or_default(),
        };
        if let Some(s) = &cfg.sweep {
            if s.axis == Axis::Temperature && !cfg.has_thermal_medium() {
                return Err(Error::schema(
                    "sweep.axis",
                    "temperature sweep needs at least one thermal medium",
                ));
            }
            if s.axis == Axis::Temperature && problem == Problem::Pair {
                return Err(Error::schema("sweep.axis", "pair problems have no temperature"));
            }
        }
        // Resolve once so population errors surface at parse time.
        match problem {
            Problem::Pair => {}
            Problem::Surface => {
                cfg.surface_problem()?;
            }
            Problem::Media | Problem::Lifshitz => {
                cfg.slab_problem()?;
            }
        }
        Ok(cfg)
    }

    fn has_thermal_medium(&self) -> bool {
        [self.medium_a, self.medium_b]
            .iter()
            .flatten()
            .any(MediumSpec::is_thermal)
    }

    fn raw(&self) -> RawConfig {
        let (state_a, state_b) = match self.problem {
            Problem::Pair => (Some(self.state_a), Some(self.state_b)),
            Problem::Surface => (Some(self.state_a), None),
            Problem::Media | Problem::Lifshitz => (None, None),
        };
        RawConfig {
            problem: self.problem,
            atom_a: Some(self.atom_a),
            atom_b: Some(self.atom_b),
            state_a,
            state_b,
            medium_a: self.medium_a,
            medium_b: self.medium_b,
            temperature: self.temperature,
            geometry: self.geometry,
            sweep: self.sweep,
            output: Some(self.output),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.raw()).expect("config serializes")
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.raw()).expect("config serializes")
    }

    pub fn pair_configuration(&self) -> PairConfiguration {
        PairConfiguration::new(self.atom_a, self.state_a, self.atom_b, self.state_b)
    }

    fn medium(&self, spec: Option<MediumSpec>, species: TwoLevelAtom, key: &str) -> Result<MediumState> {
        require(spec, key)?.resolve(species, self.temperature, key)
    }

    pub fn surface_problem(&self) -> Result<SurfaceProblem> {
        let medium = self.medium(self.medium_b, self.atom_b, "medium_b")?;
        SurfaceProblem::new(self.atom_a, self.state_a, medium, self.geometry)
    }

    pub fn slab_problem(&self) -> Result<SlabProblem> {
        let a = self.medium(self.medium_a, self.atom_a, "medium_a")?;
        let b = self.medium(self.medium_b, self.atom_b, "medium_b")?;
        SlabProblem::new(a, b, self.geometry)
    }

    /// Copy of this configuration with the swept parameter set to `value`.
    pub fn with_axis_value(&self, axis: Axis, value: f64) -> Result<RunConfig> {
        let mut c = self.clone();
        match axis {
            Axis::Geometry => {
                if !(value > 0.0) {
                    return Err(Error::ZeroSeparation(value));
                }
                c.geometry = value;
            }
            Axis::OmegaA => c.atom_a = c.atom_a.with_omega(value)?,
            Axis::OmegaB => c.atom_b = c.atom_b.with_omega(value)?,
            Axis::GammaB => c.atom_b = c.atom_b.with_gamma(value)?,
            Axis::Temperature => {
                if !(value > 0.0) {
                    return Err(Error::NonPositiveTemperature(value));
                }
                c.temperature = Some(value);
                for m in [&mut c.medium_a, &mut c.medium_b].into_iter().flatten() {
                    if let MediumSpec::Thermal { temperature, .. } = m {
                        *temperature = Some(value);
                    }
                }
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAIR: &str = r#"{
        "problem": "pair",
        "atom_a": {"omega": 1.0, "gamma": 0.0, "d2": 1.0},
        "atom_b": {"omega": 0.9, "gamma": 0.02, "d2": 1.0},
        "state_a": "e", "state_b": "g",
        "geometry": 1.0
    }"#;

    #[test]
    fn minimal_pair_config() {
        let c = parse_config(PAIR).unwrap();
        assert_eq!(c.problem, Problem::Pair);
        assert_eq!(c.state_a, AtomState::Excited);
        assert_eq!(c.output, OutputFormat::Csv);
        assert_eq!(c.sweep, None);
        assert_eq!(c.atom_b.gamma(), 0.02);
    }

    #[test]
    fn zero_geometry_rejected() {
        let text = PAIR.replace("\"geometry\": 1.0", "\"geometry\": 0");
        match parse_config(&text) {
            Err(Error::Schema { path, message }) => {
                assert_eq!(path, "geometry");
                assert!(message.contains("geometry must be > 0"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sweep_with_many_points() {
        let text = PAIR.replace(
            "\"geometry\": 1.0",
            "\"geometry\": 1.0, \"sweep\": {\"axis\": \"omega_a\", \"min\": 0.5, \"max\": 1.5, \"points\": 1001}",
        );
        let c = parse_config(&text).unwrap();
        let s = c.sweep.unwrap();
        assert_eq!(s.axis, Axis::OmegaA);
        assert_eq!(s.points, 1001);
        let v = s.values();
        assert_eq!(v.len(), 1001);
        assert_eq!(v[0], 0.5);
        assert_eq!(v[1000], 1.5);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn unknown_key_is_schema_error_with_path() {
        let text = PAIR.replace("\"state_a\"", "\"colour\": 3, \"state_a\"");
        assert!(matches!(parse_config(&text), Err(Error::Schema { .. })));
        let nested = PAIR.replace("\"d2\": 1.0}", "\"d2\": 1.0, \"spin\": 1}");
        match parse_config(&nested) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "atom_a.spin"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_atom_reports_key_path() {
        let text = PAIR.replace("\"omega\": 0.9", "\"omega\": -0.9");
        match parse_config(&text) {
            Err(Error::Schema { path, message }) => {
                assert_eq!(path, "atom_b");
                assert!(message.contains("omega"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_json_is_parse_error() {
        assert!(matches!(parse_config("{\"problem\": "), Err(Error::Parse(_))));
        assert!(matches!(parse_config(&format!("{PAIR} x")), Err(Error::Parse(_))));
    }

    #[test]
    fn missing_and_foreign_keys() {
        let text = r#"{"problem":"media","atom_a":{"omega":1,"gamma":0,"d2":1},
            "atom_b":{"omega":1,"gamma":0.02,"d2":1},"medium_a":{"n_g":1,"n_e":0},"geometry":1}"#;
        match parse_config(text) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "medium_b"),
            other => panic!("unexpected {other:?}"),
        }
        let text = PAIR.replace("\"geometry\"", "\"medium_a\": {\"n_g\": 1, \"n_e\": 0}, \"geometry\"");
        match parse_config(&text) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "medium_a"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn thermal_medium_resolves() {
        let text = r#"{"problem":"media","atom_a":{"omega":0.9,"gamma":0,"d2":1},
            "atom_b":{"omega":1,"gamma":0.02,"d2":1},
            "medium_a":{"n_total":1},"medium_b":{"n_total":1,"temperature":0.3},
            "temperature":0.3,"geometry":1,
            "sweep":{"axis":"temperature","min":0.05,"max":1,"points":5,"scale":"log"}}"#;
        let c = parse_config(text).unwrap();
        let slab = c.slab_problem().unwrap();
        assert!((slab.medium_a.n_g() + slab.medium_a.n_e() - 1.0).abs() < 1e-15);
        let hot = c
            .with_axis_value(Axis::Temperature, 1e6)
            .unwrap()
            .slab_problem()
            .unwrap();
        assert!((hot.medium_b.n_e() - 0.5).abs() < 1e-6);
    }

    #[test]
    fn thermal_without_temperature_rejected() {
        let text = r#"{"problem":"media","atom_a":{"omega":0.9,"gamma":0,"d2":1},
            "atom_b":{"omega":1,"gamma":0.02,"d2":1},
            "medium_a":{"n_total":1},"medium_b":{"n_g":1,"n_e":0},"geometry":1}"#;
        match parse_config(text) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "medium_a.temperature"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_sweeps() {
        for sweep in [
            r#"{"axis":"geometry","min":1,"max":2,"points":1}"#,
            r#"{"axis":"geometry","min":2,"max":1,"points":5}"#,
            r#"{"axis":"geometry","min":0,"max":1,"points":5,"scale":"log"}"#,
            r#"{"axis":"wavelength","min":1,"max":2,"points":5}"#,
        ] {
            let text = PAIR.replace("\"geometry\": 1.0", &format!("\"geometry\": 1.0, \"sweep\": {sweep}"));
            assert!(matches!(parse_config(&text), Err(Error::Schema { .. })), "{sweep}");
        }
    }

    #[test]
    fn log_sweep_values() {
        let s = SweepAxis::new(Axis::Geometry, 0.1, 10.0, 3, Scale::Log).unwrap();
        let v = s.values();
        assert_eq!(v[0], 0.1);
        assert!((v[1] - 1.0).abs() < 1e-15);
        assert_eq!(v[2], 10.0);
    }

    #[test]
    fn serialization_round_trip() {
        let c = parse_config(PAIR).unwrap();
        assert_eq!(parse_config(&c.to_json()).unwrap(), c);
    }
}
