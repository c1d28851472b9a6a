//! The operations behind each CLI subcommand. Every command is a pure
//! function of its [`RunConfig`]; writing the output is left to the caller.

use serde_json::{json, Value};

use super::claims::{verify_claims, ClaimReport};
use super::config::{Engine, Format, RunConfig};
use super::csv::{format_g17, json_number, render_cells};
use super::sweep::{Axis, SweepResult, SweepSpec, SweepTarget};
use crate::classical::{candidate_table, find_equilibria_with, sweep_classical, ClassicalProfile};
use crate::error::Result;
use crate::montecarlo::{simulate, EstimateReport, SimulationSpec, SimulationTarget};
use crate::model::ScenarioBinding;
use crate::quantum::{ne_grid_search, sweep_quantum, QuantumProfile, QuantumStrategy};

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Table(SweepResult<f64>),
    /// A JSON document with an optional tabular rendition for `--format csv`.
    Document { json: Value, csv: Option<String> },
    Claims(ClaimReport),
}

impl Output {
    /// Main rendition. Documents without a tabular form are always JSON.
    pub fn render(&self, format: Format) -> String {
        let pretty = |v: &Value| {
            let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
            s.push('\n');
            s
        };
        match (self, format) {
            (Output::Table(t), Format::Csv) => t.to_csv(),
            (Output::Table(t), Format::Json) => pretty(&t.to_json()),
            (Output::Document { csv: Some(c), .. }, Format::Csv) => c.clone(),
            (Output::Document { json, .. }, _) => pretty(json),
            (Output::Claims(r), _) => pretty(&r.to_json()),
        }
    }

    /// Human-readable companion, produced only for the claims report.
    pub fn text(&self) -> Option<String> {
        match self {
            Output::Claims(r) => Some(r.to_text()),
            _ => None,
        }
    }
}

const TREND_KS: [f64; 6] = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
const RATIONAL: ScenarioBinding<f64> = ScenarioBinding::Symmetric { k: 1.0 };

/// Utilities over `(k, p, q)`; by default six `k` values and an 11 x 11 intent grid.
pub fn cmd_classical_utility(cfg: &RunConfig) -> Result<Output> {
    let axes = cfg.axes_or(vec![
        Axis::values("k", TREND_KS.to_vec())?,
        Axis::range("p", 0.0, 1.0, 11)?,
        Axis::range("q", 0.0, 1.0, 11)?,
    ])?;
    let spec = SweepSpec {
        axes,
        target: SweepTarget::ClassicalUtility {
            payoffs: cfg.payoffs()?,
            scenario: cfg.scenario_or(RATIONAL),
            p: cfg.point.p,
            q: cfg.point.q,
        },
    };
    Ok(Output::Table(sweep_classical(&spec)?))
}

/// Motivation to cooperate over `(k, b/c)`; by default 51 x 90 points on
/// `[0.5, 1] x [1.1, 10]`.
pub fn cmd_delta_m(cfg: &RunConfig) -> Result<Output> {
    let axes = cfg.axes_or(vec![Axis::range("k", 0.5, 1.0, 51)?, Axis::range("b_over_c", 1.1, 10.0, 90)?])?;
    let d = cfg.delta_m;
    let spec = SweepSpec {
        axes,
        target: SweepTarget::DeltaM {
            c: d.c,
            p: d.p,
            q: d.q,
            scenario: cfg.scenario_or(RATIONAL),
            b_over_c: 2.0,
        },
    };
    Ok(Output::Table(sweep_classical(&spec)?))
}

/// Quantum utilities; by default six `k` values over a 181 x 181 `theta` grid at zero phase.
pub fn cmd_quantum(cfg: &RunConfig) -> Result<Output> {
    let pi = std::f64::consts::PI;
    let axes = cfg.axes_or(vec![
        Axis::values("k", TREND_KS.to_vec())?,
        Axis::range("theta_a", 0.0, pi, 181)?,
        Axis::range("theta_b", 0.0, pi, 181)?,
    ])?;
    let pt = cfg.point;
    let spec = SweepSpec {
        axes,
        target: SweepTarget::QuantumUtility {
            payoffs: cfg.payoffs()?,
            scenario: cfg.scenario_or(RATIONAL),
            theta_a: pt.theta_a,
            theta_b: pt.theta_b,
            phi_a: pt.phi_a,
            phi_b: pt.phi_b,
        },
    };
    Ok(Output::Table(sweep_quantum(&spec)?))
}

/// Scenarios examined by `ne`: rational, then symmetric, one-rational and
/// complementary at the configured `k` (0.8 by default), then the configured
/// scenario itself when it is `independent`.
fn ne_scenarios(cfg: &RunConfig) -> Vec<ScenarioBinding<f64>> {
    let k = cfg.scenario.map_or(0.8, |s| s.k());
    let mut out = vec![
        RATIONAL,
        ScenarioBinding::Symmetric { k },
        ScenarioBinding::OneRational { k },
        ScenarioBinding::Complementary { k },
    ];
    if let Some(s @ ScenarioBinding::Independent { .. }) = cfg.scenario {
        out.push(s);
    }
    out
}

fn g(x: f64) -> String {
    format_g17(x)
}

fn opt(x: Option<f64>) -> String {
    x.map(format_g17).unwrap_or_default()
}

/// Equilibria per scenario, with the candidate table (classical engine) or
/// the grid search report (quantum engine).
pub fn cmd_ne(cfg: &RunConfig) -> Result<Output> {
    let m = cfg.payoffs()?;
    let quantum = cfg.engine == Some(Engine::Quantum);
    let mut entries = Vec::new();
    let mut rows: Vec<Vec<String>> = Vec::new();
    for s in ne_scenarios(cfg) {
        let (k, kp) = s.resolve()?;
        let label = s.mode_name();
        if quantum {
            let report = ne_grid_search(&m, k, kp, &cfg.quantum_grid(), &[])?;
            let all = report.slice_equilibria.iter().map(|e| ("slice", e));
            let phased = report.phase_equilibria.iter().flatten().map(|e| ("phase", e));
            for (set, e) in all.chain(phased) {
                rows.push(vec![
                    label.into(),
                    g(k.value()),
                    g(kp.value()),
                    set.into(),
                    g(e.theta_a),
                    g(e.theta_b),
                    g(e.phi_a),
                    g(e.phi_b),
                    g(e.x_a),
                    g(e.x_b),
                    g(e.gain_alice),
                    g(e.gain_bob),
                    enum_str(&e.source),
                    enum_str(&e.certification),
                ]);
            }
            entries.push(json!({
                "scenario": label,
                "report": serde_json::to_value(&report).expect("report serializes"),
            }));
        } else {
            let eqs = find_equilibria_with(&m, k, kp, cfg.ne_options());
            let table = candidate_table(&m, k, kp, cfg.ne_options());
            for c in &table {
                rows.push(vec![
                    label.into(),
                    g(k.value()),
                    g(kp.value()),
                    c.candidate.clone(),
                    opt(c.p),
                    opt(c.q),
                    c.alice_condition.to_string(),
                    c.bob_condition.to_string(),
                    c.equilibrium.to_string(),
                    c.note.clone().unwrap_or_default(),
                ]);
            }
            entries.push(json!({
                "scenario": label,
                "k": k.value(),
                "kprime": kp.value(),
                "equilibria": serde_json::to_value(&eqs).expect("points serialize"),
                "candidates": serde_json::to_value(&table).expect("table serializes"),
            }));
        }
    }
    let columns: &[&str] = if quantum {
        &[
            "scenario", "k", "kprime", "set", "theta_a", "theta_b", "phi_a", "phi_b", "x_a", "x_b",
            "gain_alice", "gain_bob", "source", "certification",
        ]
    } else {
        &[
            "scenario", "k", "kprime", "candidate", "p", "q", "alice_condition", "bob_condition", "equilibrium",
            "note",
        ]
    };
    let doc = json!({
        "game": cfg.game.preset,
        "payoffs": {"alpha": json_number(m.alpha), "beta": json_number(m.beta), "gamma": json_number(m.gamma), "delta": json_number(m.delta)},
        "labels": cfg.labels(),
        "engine": if quantum { "quantum" } else { "classical" },
        "scenarios": entries,
    });
    Ok(Output::Document {
        json: doc,
        csv: Some(render_cells(columns, rows)),
    })
}

fn enum_str<S: serde::Serialize>(v: &S) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

pub fn cmd_verify_claims(cfg: &RunConfig) -> Result<Output> {
    Ok(Output::Claims(verify_claims(cfg.ne_options(), cfg.quantum_grid())?))
}

/// Builds the simulation from the configured point: intents `(p, q)` for
/// the classical engine, angles for the quantum one.
pub fn simulation_spec(cfg: &RunConfig) -> Result<SimulationSpec<f64>> {
    let (k, kprime) = cfg.scenario_or(RATIONAL).resolve()?;
    let pt = cfg.point;
    let target = if cfg.engine == Some(Engine::Quantum) {
        SimulationTarget::Quantum {
            profile: QuantumProfile::new(
                named_angles(pt.theta_a, pt.phi_a, "point.theta_a", "point.phi_a")?,
                named_angles(pt.theta_b, pt.phi_b, "point.theta_b", "point.phi_b")?,
            ),
            k,
            kprime,
        }
    } else {
        SimulationTarget::Classical {
            profile: ClassicalProfile::new(pt.p, pt.q)?,
            k,
            kprime,
        }
    };
    Ok(SimulationSpec {
        trials: cfg.trials.unwrap_or(1_000_000),
        seed: cfg.seed,
        payoffs: cfg.payoffs()?,
        target,
    })
}

fn named_angles(theta: f64, phi: f64, theta_name: &'static str, phi_name: &'static str) -> Result<QuantumStrategy<f64>> {
    QuantumStrategy::new(theta, phi).map_err(|e| match e {
        crate::Error::Domain { name, value, expected } => crate::Error::Domain {
            name: if name == "theta" { theta_name } else { phi_name },
            value,
            expected,
        },
        other => other,
    })
}

pub fn cmd_simulate(cfg: &RunConfig) -> Result<Output> {
    let report: EstimateReport<f64> = simulate(&simulation_spec(cfg)?)?;
    Ok(Output::Document {
        json: serde_json::to_value(&report).expect("report serializes"),
        csv: None,
    })
}
