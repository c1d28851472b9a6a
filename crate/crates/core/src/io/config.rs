//! JSON run configuration, validated against the bundled schema on load.

use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use jsonschema::error::ValidationErrorKind;
use jsonschema::paths::PathChunk;
use jsonschema::JSONSchema;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::sweep::Axis;
use crate::classical::NeOptions;
use crate::error::{Error, Result};
use crate::model::{validate_preset, GamePreset, OptionLabels, PayoffMatrix, ScenarioBinding};
use crate::quantum::QuantumGrid;

/// Schema every configuration document must satisfy.
pub const RUN_CONFIG_SCHEMA: &str = include_str!("../../schemas/run_config.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    #[default]
    Classical,
    Quantum,
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameConfig {
    #[serde(default = "default_preset")]
    pub preset: GamePreset,
    /// Overrides the preset's default payoffs; required for `custom`.
    #[serde(default)]
    pub payoffs: Option<PayoffMatrix<f64>>,
    #[serde(default)]
    pub labels: Option<OptionLabels>,
}

fn default_preset() -> GamePreset {
    GamePreset::PrisonersDilemma
}

impl Default for GameConfig {
    fn default() -> Self {
        GameConfig {
            preset: default_preset(),
            payoffs: None,
            labels: None,
        }
    }
}

/// Either `min`/`max`/`steps` or an explicit `values` list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisConfig {
    pub name: String,
    #[serde(default)]
    pub min: Option<f64>,
    #[serde(default)]
    pub max: Option<f64>,
    #[serde(default)]
    pub steps: Option<usize>,
    #[serde(default)]
    pub values: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PointConfig {
    pub p: f64,
    pub q: f64,
    pub theta_a: f64,
    pub theta_b: f64,
    pub phi_a: f64,
    pub phi_b: f64,
}

impl Default for PointConfig {
    fn default() -> Self {
        PointConfig {
            p: 0.5,
            q: 0.5,
            theta_a: 0.0,
            theta_b: 0.0,
            phi_a: 0.0,
            phi_b: 0.0,
        }
    }
}

/// Fixed inputs of the cooperation-motivation surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DeltaMConfig {
    pub c: f64,
    pub p: f64,
    pub q: f64,
}

impl Default for DeltaMConfig {
    fn default() -> Self {
        DeltaMConfig {
            c: 1.0,
            p: 1.0,
            q: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    pub classical_points: usize,
    pub theta_points: usize,
    pub phi_points: usize,
    pub refine_factor: usize,
    pub slack: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            classical_points: 101,
            theta_points: 181,
            phi_points: 46,
            refine_factor: 10,
            slack: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub path: Option<PathBuf>,
    pub format: Option<Format>,
}

/// A complete run description. Every field has a default, so `{}` is valid.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub game: GameConfig,
    pub scenario: Option<ScenarioBinding<f64>>,
    pub engine: Option<Engine>,
    /// Sweep axes; each command falls back to its own defaults when absent.
    pub axes: Option<Vec<AxisConfig>>,
    pub point: PointConfig,
    pub delta_m: DeltaMConfig,
    pub grid: GridConfig,
    pub include_phase: bool,
    pub trials: Option<u64>,
    pub seed: u64,
    pub output: OutputConfig,
}

fn schema() -> &'static JSONSchema {
    static SCHEMA: OnceLock<JSONSchema> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        let doc: Value = serde_json::from_str(RUN_CONFIG_SCHEMA).expect("bundled schema is JSON");
        JSONSchema::compile(&doc).expect("bundled schema compiles")
    })
}

/// Renders a JSON pointer as `a.b[2].c`.
fn dotted<'a>(chunks: impl IntoIterator<Item = &'a PathChunk>) -> String {
    let mut out = String::new();
    for chunk in chunks {
        match chunk {
            PathChunk::Property(p) => {
                if !out.is_empty() {
                    out.push('.');
                }
                out.push_str(p);
            }
            PathChunk::Index(i) => out.push_str(&format!("[{i}]")),
            PathChunk::Keyword(k) => {
                if !out.is_empty() {
                    out.push('.');
                }
                out.push_str(k);
            }
        }
    }
    if out.is_empty() {
        "<root>".into()
    } else {
        out
    }
}

impl RunConfig {
    /// Parses and validates a configuration document.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| {
            Error::config(
                format!("<document> line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        Self::from_value(value)
    }

    pub fn from_value(value: Value) -> Result<Self> {
        if let Err(mut errors) = schema().validate(&value) {
            let e = errors.next().expect("validation failure carries an error");
            let mut field = dotted(&e.instance_path);
            if let ValidationErrorKind::AdditionalProperties { unexpected } = &e.kind {
                if let Some(name) = unexpected.first() {
                    field = if field == "<root>" {
                        name.clone()
                    } else {
                        format!("{field}.{name}")
                    };
                }
            }
            return Err(Error::config(field, e.to_string()));
        }
        let cfg: RunConfig = serde_path_to_error::deserialize(value).map_err(|e| {
            let path = e.path().to_string();
            Error::config(if path == "." { "<root>".into() } else { path }, e.inner().to_string())
        })?;
        cfg.payoffs()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config("--config", format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    /// Payoffs in effect: explicit ones, else the preset defaults. Explicit
    /// payoffs for a named preset must satisfy its ordering.
    pub fn payoffs(&self) -> Result<PayoffMatrix<f64>> {
        let preset = self.game.preset;
        let m = match (self.game.payoffs, preset.default_payoffs()) {
            (Some(m), _) => PayoffMatrix::new(m.alpha, m.beta, m.gamma, m.delta)
                .map_err(|e| Error::config("game.payoffs", e.to_string()))?,
            (None, Some(m)) => m,
            (None, None) => {
                return Err(Error::config("game.payoffs", "required for the custom preset"));
            }
        };
        if preset != GamePreset::Custom {
            let report = validate_preset(&m, preset);
            if !report.is_valid() {
                let violated: Vec<_> = report.violations().map(|c| c.expression).collect();
                return Err(Error::config(
                    "game.payoffs",
                    format!("violates the {} ordering: {}", preset.short_name(), violated.join(", ")),
                ));
            }
        }
        Ok(m)
    }

    pub fn labels(&self) -> OptionLabels {
        self.game.labels.clone().unwrap_or_else(|| self.game.preset.labels())
    }

    pub fn scenario_or(&self, default: ScenarioBinding<f64>) -> ScenarioBinding<f64> {
        self.scenario.unwrap_or(default)
    }

    pub fn format(&self) -> Format {
        self.output.format.unwrap_or_default()
    }

    /// Configured axes, or `defaults` when the document has none.
    pub fn axes_or(&self, defaults: Vec<Axis<f64>>) -> Result<Vec<Axis<f64>>> {
        let Some(axes) = &self.axes else {
            return Ok(defaults);
        };
        axes.iter()
            .enumerate()
            .map(|(i, a)| {
                let axis = match (&a.values, a.min, a.max, a.steps) {
                    (Some(v), None, None, None) => Axis::values(&a.name, v.clone()),
                    (None, Some(min), Some(max), Some(steps)) => Axis::range(&a.name, min, max, steps),
                    _ => Err(Error::config(
                        format!("axes[{i}]"),
                        "give either min, max and steps or values",
                    )),
                };
                axis.map_err(|e| match e {
                    Error::Config { message, .. } => Error::config(format!("axes[{i}]"), message),
                    other => other,
                })
            })
            .collect()
    }

    pub fn ne_options(&self) -> NeOptions<f64> {
        NeOptions {
            grid_points: self.grid.classical_points,
            slack: self.grid.slack,
        }
    }

    pub fn quantum_grid(&self) -> QuantumGrid<f64> {
        QuantumGrid {
            theta_points: self.grid.theta_points,
            phi_points: self.grid.phi_points,
            include_phase: self.include_phase,
            refine_factor: self.grid.refine_factor,
            slack: self.grid.slack,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn err_field(v: Value) -> String {
        match RunConfig::from_value(v).unwrap_err() {
            Error::Config { field, .. } => field,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_document_uses_defaults() {
        let cfg = RunConfig::from_json_str("{}").unwrap();
        assert_eq!(cfg, RunConfig::default());
        assert_eq!(cfg.payoffs().unwrap(), PayoffMatrix::new(3.0, 0.0, 1.0, 5.0).unwrap());
        assert_eq!(cfg.grid.theta_points, 181);
        assert_eq!(cfg.format(), Format::Csv);
    }

    #[test]
    fn full_document_round_trips() {
        let v = json!({
            "game": {"preset": "stag_hunt", "payoffs": {"alpha": 5, "beta": 1, "gamma": 4, "delta": 3}},
            "scenario": {"mode": "independent", "k": 0.7, "kprime": 0.9},
            "engine": "quantum",
            "axes": [{"name": "theta_a", "min": 0, "max": 3.0, "steps": 61},
                     {"name": "k", "values": [0.5, 1.0]}],
            "point": {"p": 0.3},
            "delta_m": {"c": 2.0},
            "grid": {"theta_points": 91},
            "include_phase": true,
            "trials": 1000,
            "seed": 18446744073709551615u64,
            "output": {"path": "out.csv", "format": "json"}
        });
        let cfg = RunConfig::from_value(v).unwrap();
        assert_eq!(cfg.engine, Some(Engine::Quantum));
        assert_eq!(cfg.seed, u64::MAX);
        assert_eq!(cfg.point.q, 0.5);
        assert_eq!(cfg.axes_or(vec![]).unwrap().len(), 2);
        assert!(cfg.quantum_grid().include_phase);
    }

    #[test]
    fn unknown_keys_are_named() {
        assert_eq!(err_field(json!({"bogus": 1})), "bogus");
        assert_eq!(err_field(json!({"grid": {"theta": 3}})), "grid.theta");
        assert_eq!(err_field(json!({"scenario": {"mode": "symmetric", "k": 0.5, "kprime": 1}})), "scenario.kprime");
    }

    #[test]
    fn invalid_values_are_named() {
        assert_eq!(err_field(json!({"axes": [{"name": "p", "min": 0, "max": 1, "steps": 0}]})), "axes[0].steps");
        assert_eq!(err_field(json!({"scenario": {"mode": "symmetric", "k": 1.5}})), "scenario.k");
        assert_eq!(err_field(json!({"grid": {"theta_points": 60}})), "grid.theta_points");
        assert_eq!(err_field(json!({"engine": "analog"})), "engine");
        assert_eq!(err_field(json!({"game": {"preset": "custom"}})), "game.payoffs");
        assert_eq!(
            err_field(json!({"game": {"preset": "stag_hunt", "payoffs": {"alpha": 3, "beta": 0, "gamma": 1, "delta": 5}}})),
            "game.payoffs"
        );
    }

    #[test]
    fn axis_semantics_are_checked_after_schema() {
        let cfg = RunConfig::from_value(json!({"axes": [{"name": "p", "min": 1, "max": 0, "steps": 3}]})).unwrap();
        match cfg.axes_or(vec![]).unwrap_err() {
            Error::Config { field, message } => {
                assert_eq!(field, "axes[0]");
                assert!(message.contains("not monotone"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_report_position() {
        let e = RunConfig::from_json_str("{\n  \"seed\": }").unwrap_err();
        assert!(e.to_string().contains("line 2"));
    }
}
