//! Built-in registry of qualitative statements about the bistable games, each
//! recomputed by the engines and given a verdict.
//!
//! Statements quantified over a range of `k` are evaluated on a fixed grid.
//! A statement that holds at every grid point is `confirmed`, one that holds
//! at none is `refuted_on_grid`, and a mixed outcome is `boundary_sensitive`.
//! Existence statements are `confirmed` as soon as one witness is found.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classical::{delta_m, find_equilibria_with, utility_pair, ClassicalProfile, EquilibriumKind, NeOptions};
use crate::error::Result;
use crate::model::{
    factorizability_defect, outcome_distribution, BistableParam, GamePreset, PayoffMatrix, Probability,
    ScenarioBinding,
};
use crate::quantum::{
    certify_quantum_profile, kraus_set, ne_grid_search, QuantumGrid, QuantumNeReport, QuantumProfile,
    QuantumStrategy,
};
use crate::scalar::linspace;

/// Schema of the serialized [`ClaimReport`].
pub const CLAIM_REPORT_SCHEMA: &str = include_str!("../../schemas/claim_report.schema.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    RefutedOnGrid,
    BoundarySensitive,
}

impl Verdict {
    /// Universal statement evaluated point by point.
    pub fn from_points(holds: &[bool]) -> Verdict {
        match (holds.iter().all(|&h| h), holds.iter().any(|&h| h)) {
            (true, _) if !holds.is_empty() => Verdict::Confirmed,
            (_, false) => Verdict::RefutedOnGrid,
            _ => Verdict::BoundarySensitive,
        }
    }

    /// Existence statement: one witness suffices.
    pub fn from_witnesses(holds: &[bool]) -> Verdict {
        if holds.iter().any(|&h| h) {
            Verdict::Confirmed
        } else {
            Verdict::RefutedOnGrid
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Confirmed => "confirmed",
            Verdict::RefutedOnGrid => "refuted_on_grid",
            Verdict::BoundarySensitive => "boundary_sensitive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub topic: String,
    pub game: String,
    pub scenario: String,
    pub statement: String,
    pub verdict: Verdict,
    pub points_evaluated: usize,
    pub points_holding: usize,
    pub computed: Value,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimSettings {
    pub classical_grid_points: usize,
    pub classical_k_grid: Vec<f64>,
    pub quantum_k_grid: Vec<f64>,
    pub theta_points: usize,
    pub phi_points: usize,
    pub refine_factor: usize,
    pub slack: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub settings: ClaimSettings,
    pub total: usize,
    pub confirmed: usize,
    pub refuted_on_grid: usize,
    pub boundary_sensitive: usize,
    pub claims: Vec<ClaimRecord>,
}

impl ClaimReport {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// One line per claim plus indented notes.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} claims: {} confirmed, {} refuted on grid, {} boundary sensitive\n",
            self.total, self.confirmed, self.refuted_on_grid, self.boundary_sensitive
        );
        for c in &self.claims {
            let _ = writeln!(
                out,
                "[{}] {} ({}, {}; {}/{} points): {}",
                c.verdict.as_str(),
                c.id,
                c.game,
                c.scenario,
                c.points_holding,
                c.points_evaluated,
                c.statement
            );
            for n in &c.notes {
                let _ = writeln!(out, "    note: {n}");
            }
        }
        out
    }
}

struct Outcome {
    verdict: Verdict,
    holding: usize,
    evaluated: usize,
    computed: Value,
    notes: Vec<String>,
}

impl Outcome {
    fn universal(holds: &[bool], computed: Value, notes: Vec<String>) -> Self {
        Outcome {
            verdict: Verdict::from_points(holds),
            holding: holds.iter().filter(|&&h| h).count(),
            evaluated: holds.len(),
            computed,
            notes,
        }
    }

    fn existential(holds: &[bool], computed: Value, notes: Vec<String>) -> Self {
        Outcome {
            verdict: Verdict::from_witnesses(holds),
            ..Outcome::universal(holds, computed, notes)
        }
    }
}

struct ClaimSpec {
    id: &'static str,
    topic: &'static str,
    game: &'static str,
    scenario: &'static str,
    statement: &'static str,
    eval: fn(&mut Context) -> Outcome,
}

/// Evaluation settings and the cache of quantum searches.
pub struct Context {
    ne: NeOptions<f64>,
    classical_points: usize,
    qgrid: QuantumGrid<f64>,
    searches: BTreeMap<(usize, u64, u64), QuantumNeReport<f64>>,
}

impl Context {
    pub fn new(ne: NeOptions<f64>, qgrid: QuantumGrid<f64>) -> Result<Self> {
        qgrid.validate()?;
        Ok(Context {
            ne,
            classical_points: ne.grid_points,
            qgrid: QuantumGrid {
                include_phase: false,
                ..qgrid
            },
            searches: BTreeMap::new(),
        })
    }

    fn settings(&self) -> ClaimSettings {
        ClaimSettings {
            classical_grid_points: self.classical_points,
            classical_k_grid: classical_ks(),
            quantum_k_grid: QUANTUM_KS.to_vec(),
            theta_points: self.qgrid.theta_points,
            phi_points: self.qgrid.phi_points,
            refine_factor: self.qgrid.refine_factor,
            slack: self.qgrid.slack,
        }
    }
}

const QUANTUM_KS: [f64; 5] = [0.6, 0.7, 0.8, 0.9, 1.0];
const TREND_KS: [f64; 6] = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0];
const TOL: f64 = 1e-12;

/// `0, 0.05, ..., 1`.
fn classical_ks() -> Vec<f64> {
    (0..=20).map(|i| i as f64 / 20.0).collect()
}

/// The classical grid without the rational and the indifferent values.
fn bistable_ks() -> Vec<f64> {
    (0..20).filter(|&i| i != 10).map(|i| i as f64 / 20.0).collect()
}

fn pm(a: f64, b: f64, c: f64, d: f64) -> PayoffMatrix<f64> {
    PayoffMatrix::new(a, b, c, d).expect("registry payoffs are finite")
}

/// Payoff sets per game: the preset defaults followed by two more members
/// of the same family.
fn payoff_sets(game: GamePreset) -> Vec<PayoffMatrix<f64>> {
    match game {
        GamePreset::PrisonersDilemma => vec![pm(3.0, 0.0, 1.0, 5.0), pm(4.0, 0.0, 2.0, 6.0), pm(2.0, -1.0, 1.0, 3.0)],
        GamePreset::StagHunt => vec![pm(4.0, 0.0, 3.0, 2.0), pm(5.0, 1.0, 4.0, 3.0), pm(10.0, 0.0, 8.0, 8.0)],
        GamePreset::Chicken => vec![pm(3.0, 1.0, 4.0, -10.0), pm(2.0, 1.0, 3.0, 0.0), pm(6.0, 2.0, 8.0, -5.0)],
        GamePreset::Custom => vec![],
    }
}

fn all_sets() -> Vec<PayoffMatrix<f64>> {
    GamePreset::ALL.iter().flat_map(|&g| payoff_sets(g)).collect()
}

fn default_payoffs(game: GamePreset) -> PayoffMatrix<f64> {
    game.default_payoffs().expect("named preset")
}

fn bp(x: f64) -> BistableParam<f64> {
    BistableParam::new(x).expect("grid value lies in [0, 1]")
}

fn resolve(s: ScenarioBinding<f64>) -> (BistableParam<f64>, BistableParam<f64>) {
    s.resolve().expect("grid value lies in [0, 1]")
}

fn weights(m: &PayoffMatrix<f64>) -> [f64; 4] {
    [m.alpha, m.beta, m.gamma, m.delta]
}

#[derive(Clone, Copy)]
enum Kind {
    Rational,
    Symmetric,
    OneRational,
    Complementary,
}

fn scenarios(kind: Kind) -> Vec<ScenarioBinding<f64>> {
    let ks = bistable_ks();
    match kind {
        Kind::Rational => vec![ScenarioBinding::Symmetric { k: 1.0 }],
        Kind::Symmetric => ks.into_iter().map(|k| ScenarioBinding::Symmetric { k }).collect(),
        Kind::OneRational => ks.into_iter().map(|k| ScenarioBinding::OneRational { k }).collect(),
        Kind::Complementary => ks.into_iter().map(|k| ScenarioBinding::Complementary { k }).collect(),
    }
}

// ---------------------------------------------------------------------------
// classical equilibria

const DIAGONAL: [&str; 3] = ["(0,0)", "(1,1)", "mixed"];
const OFF_DIAGONAL: [&str; 3] = ["(0,1)", "(1,0)", "mixed"];

fn subset(labels: &[String], family: &[&str]) -> bool {
    labels.iter().all(|l| family.contains(&l.as_str()))
}

fn has(labels: &[String], label: &str) -> bool {
    labels.iter().any(|l| l == label)
}

fn classical_labels(ctx: &Context, m: &PayoffMatrix<f64>, s: ScenarioBinding<f64>) -> (Vec<String>, Value) {
    let (k, kp) = resolve(s);
    let eqs = find_equilibria_with(m, k, kp, ctx.ne);
    let labels: Vec<String> = eqs
        .iter()
        .map(|e| match e.kind {
            EquilibriumKind::Everywhere => "everywhere".to_string(),
            EquilibriumKind::Mixed => "mixed".to_string(),
            EquilibriumKind::Pure => format!("({},{})", e.p_star as u8, e.q_star as u8),
        })
        .collect();
    let detail = json!(eqs
        .iter()
        .zip(&labels)
        .map(|(e, l)| json!({"label": l, "p": e.p_star, "q": e.q_star}))
        .collect::<Vec<_>>());
    (labels, detail)
}

/// Evaluates `pred` on the certified equilibrium labels at every
/// (payoff set, scenario) pair.
fn classical_claim(
    ctx: &mut Context,
    sets: &[PayoffMatrix<f64>],
    kinds: &[Kind],
    existential: bool,
    pred: impl Fn(&[String]) -> bool,
) -> Outcome {
    let mut holds = Vec::new();
    let mut points = Vec::new();
    let mut failing = Vec::new();
    for m in sets {
        for &kind in kinds {
            for s in scenarios(kind) {
                let (labels, detail) = classical_labels(ctx, m, s);
                let h = pred(&labels);
                let (k, kp) = resolve(s);
                if !h && !existential {
                    failing.push(format!(
                        "payoffs {:?}, k={}, k'={}: {}",
                        weights(m),
                        k.value(),
                        kp.value(),
                        labels.join(" ")
                    ));
                }
                points.push(json!({
                    "payoffs": weights(m),
                    "scenario": s.mode_name(),
                    "k": k.value(),
                    "kprime": kp.value(),
                    "equilibria": detail,
                    "holds": h,
                }));
                holds.push(h);
            }
        }
    }
    let mut notes = Vec::new();
    if !failing.is_empty() {
        let shown = failing.len().min(6);
        notes.push(format!(
            "fails at {} of {} points, e.g. {}",
            failing.len(),
            holds.len(),
            failing[..shown].join("; ")
        ));
    }
    let computed = json!({ "points": points });
    if existential {
        Outcome::existential(&holds, computed, notes)
    } else {
        Outcome::universal(&holds, computed, notes)
    }
}

const BISTABLE: [Kind; 3] = [Kind::Symmetric, Kind::OneRational, Kind::Complementary];
const EVERY: [Kind; 4] = [Kind::Rational, Kind::Symmetric, Kind::OneRational, Kind::Complementary];

fn pd() -> Vec<PayoffMatrix<f64>> {
    payoff_sets(GamePreset::PrisonersDilemma)
}
fn sh() -> Vec<PayoffMatrix<f64>> {
    payoff_sets(GamePreset::StagHunt)
}
fn cg() -> Vec<PayoffMatrix<f64>> {
    payoff_sets(GamePreset::Chicken)
}

fn half_everywhere(ctx: &mut Context) -> Outcome {
    let mut holds = Vec::new();
    let mut points = Vec::new();
    for m in all_sets() {
        let (labels, _) = classical_labels(ctx, &m, ScenarioBinding::Symmetric { k: 0.5 });
        let h = labels == ["everywhere"];
        points.push(json!({"payoffs": weights(&m), "equilibria": labels, "holds": h}));
        holds.push(h);
    }
    Outcome::universal(&holds, json!({ "points": points }), vec![])
}

fn half_utility_constant(ctx: &mut Context) -> Outcome {
    let xs = linspace(0.0, 1.0, ctx.classical_points);
    let mut holds = Vec::new();
    let mut points = Vec::new();
    for m in all_sets() {
        let target = (m.alpha + m.beta + m.gamma + m.delta) / 4.0;
        let mut worst: f64 = 0.0;
        for &p in &xs {
            for &q in &xs {
                let pi = utility_pair(&m, profile(p, q), bp(0.5), bp(0.5)).0;
                worst = worst.max((pi - target).abs());
            }
        }
        let h = worst <= TOL;
        points.push(json!({"payoffs": weights(&m), "mean_payoff": target, "max_deviation": worst, "holds": h}));
        holds.push(h);
    }
    Outcome::universal(&holds, json!({ "points": points }), vec![])
}

fn up_to_five(ctx: &mut Context) -> Outcome {
    let mut holds = Vec::new();
    let mut counts = BTreeMap::new();
    for m in all_sets() {
        for kind in EVERY {
            let mut ss = scenarios(kind);
            if let Some(first) = ss.first().copied() {
                if !matches!(kind, Kind::Rational) {
                    ss.push(first.with_k(0.5));
                }
            }
            for s in ss {
                let (labels, _) = classical_labels(ctx, &m, s);
                let finite = !has(&labels, "everywhere");
                holds.push(!finite || labels.len() <= 5);
                if finite {
                    *counts.entry(labels.len()).or_insert(0usize) += 1;
                }
            }
        }
    }
    let hist: Vec<Value> = counts.iter().map(|(n, c)| json!({"equilibria": n, "cases": c})).collect();
    Outcome::universal(
        &holds,
        json!({ "count_histogram": hist }),
        vec!["every scenario and grid value of k for all nine payoff sets".into()],
    )
}

fn non_factorisable(_: &mut Context) -> Outcome {
    let vals = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut holds = Vec::new();
    let mut worst: f64 = 0.0;
    for &p in &vals {
        for &q in &vals {
            for &k in &vals {
                for &kp in &vals {
                    let d = outcome_distribution(prob(p), prob(q), bp(k), bp(kp));
                    let defect = factorizability_defect(&d).abs();
                    worst = worst.max(defect);
                    holds.push(defect > TOL);
                }
            }
        }
    }
    Outcome::universal(
        &holds,
        json!({ "max_abs_defect": worst, "points": holds.len() }),
        vec!["eps1*eps4 - eps2*eps3 vanishes identically for the product law of the deformed intents".into()],
    )
}

// ---------------------------------------------------------------------------
// classical utilities

fn prob(x: f64) -> Probability<f64> {
    Probability::new(x).expect("grid value lies in [0, 1]")
}

fn profile(p: f64, q: f64) -> ClassicalProfile<f64> {
    ClassicalProfile { p: prob(p), q: prob(q) }
}

struct Extremes {
    min: f64,
    max: f64,
    argmax: (f64, f64),
    /// Largest value with `p = 1`.
    max_at_p1: f64,
}

fn classical_extremes(ctx: &Context, m: &PayoffMatrix<f64>, s: ScenarioBinding<f64>) -> Extremes {
    let (k, kp) = resolve(s);
    let xs = linspace(0.0, 1.0, ctx.classical_points);
    let mut e = Extremes {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
        argmax: (0.0, 0.0),
        max_at_p1: f64::NEG_INFINITY,
    };
    for &p in &xs {
        for &q in &xs {
            let v = utility_pair(m, profile(p, q), k, kp).0;
            e.min = e.min.min(v);
            if v > e.max {
                e.max = v;
                e.argmax = (p, q);
            }
            if p == 1.0 {
                e.max_at_p1 = e.max_at_p1.max(v);
            }
        }
    }
    e
}

fn pd_flattens(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::PrisonersDilemma);
    let spreads: Vec<f64> = TREND_KS
        .iter()
        .map(|&k| {
            let e = classical_extremes(ctx, &m, ScenarioBinding::Symmetric { k });
            e.max - e.min
        })
        .collect();
    let mut holds: Vec<bool> = spreads.windows(2).map(|w| w[0] < w[1]).collect();
    holds.push(spreads[0] <= TOL);
    Outcome::universal(
        &holds,
        json!({ "k": TREND_KS, "spread_pi_a": spreads }),
        vec!["spread = max - min of Pi_A over the intent grid; checked for strict growth in k and zero at k=0.5".into()],
    )
}

fn pd_rational_opponent(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::PrisonersDilemma);
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    for &k in &TREND_KS {
        let sym = classical_extremes(ctx, &m, ScenarioBinding::Symmetric { k }).max;
        let one = classical_extremes(ctx, &m, ScenarioBinding::OneRational { k }).max;
        let h = one >= sym - TOL;
        rows.push(json!({"k": k, "max_symmetric": sym, "max_one_rational": one, "holds": h}));
        holds.push(h);
    }
    Outcome::universal(&holds, json!({ "points": rows }), vec![])
}

fn pd_complementary_cooperate(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::PrisonersDilemma);
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    for &k in &QUANTUM_KS {
        let e = classical_extremes(ctx, &m, ScenarioBinding::Complementary { k });
        let h = e.max_at_p1 >= e.max - TOL;
        rows.push(json!({"k": k, "max": e.max, "argmax_p": e.argmax.0, "argmax_q": e.argmax.1, "max_with_p_1": e.max_at_p1, "holds": h}));
        holds.push(h);
    }
    Outcome::universal(
        &holds,
        json!({ "points": rows }),
        vec!["option Y (p = 1) is cooperation; k = 0.5 is omitted because Pi_A is flat there".into()],
    )
}

fn pd_complementary_lowest(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::PrisonersDilemma);
    let mut tied = false;
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    for &k in &QUANTUM_KS {
        let comp = classical_extremes(ctx, &m, ScenarioBinding::Complementary { k }).max;
        let sym = classical_extremes(ctx, &m, ScenarioBinding::Symmetric { k }).max;
        let one = classical_extremes(ctx, &m, ScenarioBinding::OneRational { k }).max;
        let h = comp < sym.min(one) - TOL;
        rows.push(json!({"k": k, "max_complementary": comp, "max_symmetric": sym, "max_one_rational": one, "holds": h}));
        holds.push(h);
        tied |= (comp - sym).abs() <= TOL;
    }
    let mut notes = Vec::new();
    if tied {
        notes.push("q_(1-k) sweeps the same interval [1-k, k] as q_k, so the complementary and symmetric maxima coincide".into());
    }
    Outcome::universal(&holds, json!({ "points": rows }), notes)
}

fn max_when_rational(ctx: &mut Context) -> Outcome {
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    for g in GamePreset::ALL {
        let m = default_payoffs(g);
        let maxima: Vec<f64> = TREND_KS
            .iter()
            .map(|&k| classical_extremes(ctx, &m, ScenarioBinding::Symmetric { k }).max)
            .collect();
        let top = *maxima.last().unwrap();
        holds.extend(maxima.iter().map(|&v| v <= top + TOL));
        rows.push(json!({"game": g.short_name(), "k": TREND_KS, "max_pi_a": maxima}));
    }
    Outcome::universal(&holds, json!({ "games": rows }), vec![])
}

// ---------------------------------------------------------------------------
// motivation to cooperate

const DM_KS: [f64; 11] = [0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95, 1.0];

fn bc_grid() -> Vec<f64> {
    linspace(1.1, 10.0, 90)
}

fn dm(bc: f64, k: f64) -> f64 {
    delta_m(bc, 1.0, prob(1.0), prob(1.0), bp(k), bp(k)).expect("b > c > 0 on the grid")
}

fn dm_note() -> Vec<String> {
    vec!["c = 1, p = q = 1, k' = k, b/c over 90 points in [1.1, 10]".into()]
}

fn dm_increasing_bc(_: &mut Context) -> Outcome {
    let vals: Vec<f64> = bc_grid().iter().map(|&bc| dm(bc, 1.0)).collect();
    let holds: Vec<bool> = vals.windows(2).map(|w| w[0] < w[1]).collect();
    Outcome::universal(
        &holds,
        json!({"b_over_c_first": 1.1, "b_over_c_last": 10.0, "delta_m_first": vals[0], "delta_m_last": vals[vals.len() - 1]}),
        dm_note(),
    )
}

fn dm_decreasing_k(_: &mut Context) -> Outcome {
    let mut holds = Vec::new();
    for bc in bc_grid() {
        let vals: Vec<f64> = DM_KS.iter().map(|&k| dm(bc, k)).collect();
        holds.extend(vals.windows(2).map(|w| w[0] < w[1]));
    }
    let at = |bc: f64| DM_KS.iter().map(|&k| dm(bc, k)).collect::<Vec<_>>();
    Outcome::universal(
        &holds,
        json!({"k": DM_KS, "delta_m_at_b_over_c_2": at(2.0), "delta_m_at_b_over_c_10": at(10.0)}),
        dm_note(),
    )
}

fn dm_sensitivity(_: &mut Context) -> Outcome {
    let grid = bc_grid();
    let (lo, hi) = (grid[0], grid[grid.len() - 1]);
    let slopes: Vec<f64> = DM_KS.iter().map(|&k| (dm(hi, k) - dm(lo, k)) / (hi - lo)).collect();
    let holds: Vec<bool> = slopes.windows(2).map(|w| w[0] < w[1]).collect();
    Outcome::universal(
        &holds,
        json!({"k": DM_KS, "slope_in_b_over_c": slopes}),
        {
            let mut n = dm_note();
            n.push("sensitivity = secant slope of delta_m over the b/c range".into());
            n
        },
    )
}

fn dm_defect_half(_: &mut Context) -> Outcome {
    let vals: Vec<f64> = bc_grid().iter().map(|&bc| dm(bc, 0.5)).collect();
    let holds: Vec<bool> = vals.iter().map(|&v| v < 0.0).collect();
    let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Outcome::universal(&holds, json!({"k": 0.5, "max_delta_m": max}), dm_note())
}

// ---------------------------------------------------------------------------
// quantum

fn game_index(g: GamePreset) -> usize {
    GamePreset::ALL.iter().position(|&x| x == g).expect("named preset")
}

fn search(ctx: &mut Context, g: GamePreset, s: ScenarioBinding<f64>) -> &QuantumNeReport<f64> {
    let (k, kp) = resolve(s);
    let key = (game_index(g), k.value().to_bits(), kp.value().to_bits());
    let grid = ctx.qgrid;
    ctx.searches.entry(key).or_insert_with(|| {
        ne_grid_search(&default_payoffs(g), k, kp, &grid, &[]).expect("validated grid")
    })
}

fn slice_set_json(r: &QuantumNeReport<f64>) -> Value {
    if r.everywhere_on_slice {
        return json!("everywhere");
    }
    json!(r
        .slice_equilibria
        .iter()
        .map(|e| json!({"theta_a": e.theta_a, "theta_b": e.theta_b, "x_a": e.x_a, "x_b": e.x_b}))
        .collect::<Vec<_>>())
}

fn slice_xs(r: &QuantumNeReport<f64>) -> Vec<(f64, f64)> {
    r.slice_equilibria.iter().map(|e| (e.x_a, e.x_b)).collect()
}

fn same_set(a: &[(f64, f64)], b: &[(f64, f64)]) -> bool {
    let close = |p: &(f64, f64), q: &(f64, f64)| (p.0 - q.0).abs() < 1e-6 && (p.1 - q.1).abs() < 1e-6;
    a.len() == b.len() && a.iter().all(|p| b.iter().any(|q| close(p, q)))
}

fn mixed_theta_claimed(m: &PayoffMatrix<f64>) -> f64 {
    m.indifference_point().expect("non-degenerate payoffs").sqrt().acos()
}

fn mixed_theta_corrected(m: &PayoffMatrix<f64>) -> f64 {
    2.0 * mixed_theta_claimed(m)
}

fn gains(ctx: &Context, g: GamePreset, s: ScenarioBinding<f64>, ta: f64, tb: f64, phases: bool) -> (f64, f64) {
    let (k, kp) = resolve(s);
    let grid = QuantumGrid {
        include_phase: phases,
        ..ctx.qgrid
    };
    let p = QuantumProfile::real(ta, tb).expect("angles in range");
    certify_quantum_profile(&default_payoffs(g), &kraus_set(k, kp), p, &grid)
}

type Candidate = (&'static str, f64, f64);

/// Checks that every profile in `claimed` is certified at each `k` of the
/// quantum grid. `reported` profiles are certified and listed without
/// entering the verdict.
fn quantum_points_claim(
    ctx: &mut Context,
    g: GamePreset,
    kind: Kind,
    claimed: &[Candidate],
    reported: &[Candidate],
    phases: bool,
) -> Outcome {
    let slack = ctx.qgrid.slack;
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    let mut failing: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    for &k in &QUANTUM_KS {
        let s = match kind {
            Kind::Complementary => ScenarioBinding::Complementary { k },
            _ => ScenarioBinding::Symmetric { k },
        };
        let check = |ctx: &Context, list: &[Candidate]| -> Vec<(String, bool, Value)> {
            list.iter()
                .map(|&(label, ta, tb)| {
                    let (ga, gb) = gains(ctx, g, s, ta, tb, phases);
                    let ok = ga <= slack && gb <= slack;
                    let v = json!({
                        "label": label, "theta_a": ta, "theta_b": tb,
                        "x_a": (ta / 2.0).cos().powi(2), "x_b": (tb / 2.0).cos().powi(2),
                        "gain_alice": ga, "gain_bob": gb, "certified": ok,
                    });
                    (label.to_string(), ok, v)
                })
                .collect()
        };
        let c = check(ctx, claimed);
        let r = check(ctx, reported);
        let h = c.iter().all(|x| x.1);
        for (label, ok, _) in &c {
            if !ok {
                failing.entry(claimed.iter().find(|x| x.0 == label).unwrap().0).or_default().push(k);
            }
        }
        let report = search(ctx, g, s);
        rows.push(json!({
            "k": k,
            "kprime": report.kprime,
            "f": report.f,
            "validity": report.validity,
            "claimed": c.into_iter().map(|x| x.2).collect::<Vec<_>>(),
            "reported": r.into_iter().map(|x| x.2).collect::<Vec<_>>(),
            "slice_equilibria": slice_set_json(report),
            "holds": h,
        }));
        holds.push(h);
    }
    let mut notes = vec![if phases {
        "deviations range over theta and phi".to_string()
    } else {
        "deviations restricted to phi = 0".to_string()
    }];
    for (label, ks) in failing {
        notes.push(format!("{label} is not an equilibrium at k = {ks:?}"));
    }
    Outcome::universal(&holds, json!({ "points": rows }), notes)
}

fn q_pd_midpoint_slice(ctx: &mut Context) -> Outcome {
    let pts = [("(pi/2, pi/2)", FRAC_PI_2, FRAC_PI_2)];
    quantum_points_claim(ctx, GamePreset::PrisonersDilemma, Kind::Symmetric, &pts, &[], false)
}

fn q_pd_midpoint_phases(ctx: &mut Context) -> Outcome {
    let pts = [("(pi/2, pi/2)", FRAC_PI_2, FRAC_PI_2)];
    quantum_points_claim(ctx, GamePreset::PrisonersDilemma, Kind::Symmetric, &pts, &[], true)
}

fn q_pd_complementary_origin(ctx: &mut Context) -> Outcome {
    let pts = [("(0, 0)", 0.0, 0.0)];
    quantum_points_claim(ctx, GamePreset::PrisonersDilemma, Kind::Complementary, &pts, &[], false)
}

fn q_sh_midpoint(ctx: &mut Context) -> Outcome {
    let pts = [("(pi/2, pi/2)", FRAC_PI_2, FRAC_PI_2)];
    quantum_points_claim(ctx, GamePreset::StagHunt, Kind::Symmetric, &pts, &[], false)
}

fn q_sh_origin(ctx: &mut Context) -> Outcome {
    let pts = [("(0, 0)", 0.0, 0.0)];
    quantum_points_claim(ctx, GamePreset::StagHunt, Kind::Symmetric, &pts, &[], false)
}

fn mixed_candidates(g: GamePreset) -> ([Candidate; 1], [Candidate; 1]) {
    let m = default_payoffs(g);
    let (a, b) = (mixed_theta_claimed(&m), mixed_theta_corrected(&m));
    ([("acos(sqrt(t*)) on both axes", a, a)], [("2 acos(sqrt(t*)) on both axes", b, b)])
}

fn mixed_note(g: GamePreset) -> String {
    let m = default_payoffs(g);
    let t = m.indifference_point().unwrap();
    let a = mixed_theta_claimed(&m);
    format!(
        "t* = (delta - beta)/Gamma = {t:.6}; theta = acos(sqrt(t*)) = {a:.6} gives x = cos^2(theta/2) = {:.6}, \
         while x = t* needs theta = 2 acos(sqrt(t*)) = {:.6} (listed under `reported`)",
        (a / 2.0).cos().powi(2),
        2.0 * a
    )
}

fn q_sh_mixed(ctx: &mut Context) -> Outcome {
    let (claimed, corrected) = mixed_candidates(GamePreset::StagHunt);
    let mut o = quantum_points_claim(ctx, GamePreset::StagHunt, Kind::Symmetric, &claimed, &corrected, false);
    o.notes.push(mixed_note(GamePreset::StagHunt));
    o
}

fn q_sh_complementary_pure(ctx: &mut Context) -> Outcome {
    let pts = [("(pi/2, 0)", FRAC_PI_2, 0.0), ("(0, pi/2)", 0.0, FRAC_PI_2)];
    quantum_points_claim(ctx, GamePreset::StagHunt, Kind::Complementary, &pts, &[], false)
}

fn q_sh_complementary_mixed(ctx: &mut Context) -> Outcome {
    let (claimed, corrected) = mixed_candidates(GamePreset::StagHunt);
    let mut o = quantum_points_claim(ctx, GamePreset::StagHunt, Kind::Complementary, &claimed, &corrected, false);
    o.notes.push(mixed_note(GamePreset::StagHunt));
    o
}

fn cg_symmetric_note(ctx: &mut Context, pts: &[Candidate]) -> String {
    let o = quantum_points_claim(ctx, GamePreset::Chicken, Kind::Symmetric, pts, &[], false);
    format!(
        "with k' = k instead of k' = 1 - k the same profiles give: {} ({}/{} grid values)",
        o.verdict.as_str(),
        o.holding,
        o.evaluated
    )
}

fn q_cg_first(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::Chicken);
    let a = mixed_theta_claimed(&m);
    let b = mixed_theta_corrected(&m);
    let pts = [("(0, pi/2)", 0.0, FRAC_PI_2), ("(pi/2, 0)", FRAC_PI_2, 0.0), ("acos(sqrt(t*)) on both axes", a, a)];
    let rep = [("2 acos(sqrt(t*)) on both axes", b, b)];
    let mut o = quantum_points_claim(ctx, GamePreset::Chicken, Kind::Complementary, &pts, &rep, false);
    o.notes.push(mixed_note(GamePreset::Chicken));
    o.notes.push(cg_symmetric_note(ctx, &pts));
    o
}

fn q_cg_second(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::Chicken);
    let a = mixed_theta_claimed(&m);
    let b = mixed_theta_corrected(&m);
    let pts = [("(0, 0)", 0.0, 0.0), ("(pi/2, pi/2)", FRAC_PI_2, FRAC_PI_2), ("acos(sqrt(t*)) on both axes", a, a)];
    let rep = [("2 acos(sqrt(t*)) on both axes", b, b)];
    let mut o = quantum_points_claim(ctx, GamePreset::Chicken, Kind::Complementary, &pts, &rep, false);
    o.notes.push(
        "both chicken statements are stated for k' = 1 - k; this one is evaluated as stated".into(),
    );
    o.notes.push(cg_symmetric_note(ctx, &pts));
    o
}

fn q_half_ne_independent(ctx: &mut Context) -> Outcome {
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    for g in GamePreset::ALL {
        let everywhere = search(ctx, g, ScenarioBinding::Symmetric { k: 0.5 }).everywhere_on_slice;
        let spread = phased_extremes(&default_payoffs(g), 0.5, 0.5);
        let flat = spread.max - spread.min <= TOL;
        let h = everywhere && flat;
        rows.push(json!({"game": g.short_name(), "everywhere_on_slice": everywhere, "phased_spread": spread.max - spread.min, "holds": h}));
        holds.push(h);
    }
    Outcome::universal(&holds, json!({ "games": rows }), vec![])
}

fn q_ne_independent_of_k(ctx: &mut Context) -> Outcome {
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    let mut flipped = Vec::new();
    for g in GamePreset::ALL {
        let reference = slice_xs(search(ctx, g, ScenarioBinding::Symmetric { k: 1.0 }));
        for kind in [Kind::Symmetric, Kind::Complementary] {
            for &k in &QUANTUM_KS {
                let s = match kind {
                    Kind::Complementary => ScenarioBinding::Complementary { k },
                    _ => ScenarioBinding::Symmetric { k },
                };
                let r = search(ctx, g, s);
                let h = !r.everywhere_on_slice && same_set(&slice_xs(r), &reference);
                if !h {
                    flipped.push(format!("{} {} k={k}", g.short_name(), s.mode_name()));
                }
                rows.push(json!({"game": g.short_name(), "scenario": s.mode_name(), "k": k, "f": r.f, "slice_equilibria": slice_set_json(r), "holds": h}));
                holds.push(h);
            }
        }
    }
    let mut notes = vec!["equilibria compared as x = cos^2(theta/2) pairs against k = k' = 1".to_string()];
    if !flipped.is_empty() {
        notes.push(format!(
            "the set changes where f = (2k-1)(2k'-1) < 0, since the sign of f reverses every best response: {}",
            flipped.join(", ")
        ));
    }
    Outcome::universal(&holds, json!({ "points": rows }), notes)
}

fn q_up_to_three(ctx: &mut Context) -> Outcome {
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    for g in GamePreset::ALL {
        for &k in &QUANTUM_KS {
            for s in [ScenarioBinding::Symmetric { k }, ScenarioBinding::Complementary { k }] {
                let r = search(ctx, g, s);
                let h = !r.everywhere_on_slice && r.slice_certified <= 3;
                rows.push(json!({"game": g.short_name(), "scenario": s.mode_name(), "k": k, "count": r.slice_certified, "holds": h}));
                holds.push(h);
            }
        }
    }
    Outcome::universal(&holds, json!({ "points": rows }), vec!["deviations restricted to phi = 0".into()])
}

struct SliceStats {
    min: f64,
    max: f64,
    mean: f64,
    argmax: (f64, f64),
    at_midpoint: f64,
    max_on_theta0_lines: f64,
}

fn slice_stats(ctx: &Context, m: &PayoffMatrix<f64>, k: f64, kp: f64) -> SliceStats {
    let ks = kraus_set(bp(k), bp(kp));
    let thetas = linspace(0.0, PI, ctx.qgrid.theta_points);
    let strategies: Vec<QuantumStrategy<f64>> =
        thetas.iter().map(|&t| QuantumStrategy::real(t.min(PI)).expect("theta in range")).collect();
    let mid = ks
        .utilities(m, QuantumStrategy::real(FRAC_PI_2).unwrap(), QuantumStrategy::real(FRAC_PI_2).unwrap())
        .0;
    let mut s = SliceStats {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
        mean: 0.0,
        argmax: (0.0, 0.0),
        at_midpoint: mid,
        max_on_theta0_lines: f64::NEG_INFINITY,
    };
    for (i, &sa) in strategies.iter().enumerate() {
        for (j, &sb) in strategies.iter().enumerate() {
            let v = ks.utilities(m, sa, sb).0;
            s.min = s.min.min(v);
            s.mean += v;
            if v > s.max {
                s.max = v;
                s.argmax = (thetas[i], thetas[j]);
            }
            if i == 0 || j == 0 {
                s.max_on_theta0_lines = s.max_on_theta0_lines.max(v);
            }
        }
    }
    s.mean /= (thetas.len() * thetas.len()) as f64;
    s
}

struct Range {
    min: f64,
    max: f64,
}

/// Extremes of `Pi_A` over 19 theta and 10 phi values per player.
fn phased_extremes(m: &PayoffMatrix<f64>, k: f64, kp: f64) -> Range {
    let ks = kraus_set(bp(k), bp(kp));
    let mut strategies = Vec::new();
    for t in linspace(0.0, PI, 19) {
        for p in linspace(0.0, FRAC_PI_2, 10) {
            strategies.push(QuantumStrategy::new(t.min(PI), p.min(FRAC_PI_2)).expect("angles in range"));
        }
    }
    let mut r = Range {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
    };
    for &sa in &strategies {
        for &sb in &strategies {
            let v = ks.utilities(m, sa, sb).0;
            r.min = r.min.min(v);
            r.max = r.max.max(v);
        }
    }
    r
}

fn kprime_of(kind: Kind, k: f64) -> f64 {
    match kind {
        Kind::Complementary => 1.0 - k,
        _ => k,
    }
}

/// Best attainable `Pi_A` against `k` on [`TREND_KS`], on the slice and with phases.
/// `rising` selects the direction the statement asserts.
fn quantum_trend(ctx: &mut Context, g: GamePreset, kind: Kind, rising: bool) -> (Vec<bool>, Value) {
    let m = default_payoffs(g);
    let mut slice_max = Vec::new();
    let mut slice_mean = Vec::new();
    let mut phase_max = Vec::new();
    for &k in &TREND_KS {
        let kp = kprime_of(kind, k);
        let s = slice_stats(ctx, &m, k, kp);
        slice_max.push(s.max);
        slice_mean.push(s.mean);
        phase_max.push(phased_extremes(&m, k, kp).max);
    }
    let step_ok = |a: f64, b: f64| if rising { a < b - TOL } else { a > b + TOL };
    let holds: Vec<bool> = (0..TREND_KS.len() - 1)
        .map(|i| step_ok(slice_max[i], slice_max[i + 1]) && step_ok(phase_max[i], phase_max[i + 1]))
        .collect();
    let v = json!({
        "k": TREND_KS,
        "kprime": TREND_KS.iter().map(|&k| kprime_of(kind, k)).collect::<Vec<_>>(),
        "max_pi_a_slice": slice_max,
        "mean_pi_a_slice": slice_mean,
        "max_pi_a_with_phases": phase_max,
    });
    (holds, v)
}

fn trend_notes() -> Vec<String> {
    vec![
        "compared through the best attainable Pi_A at consecutive k on the phi = 0 slice and on a 19 x 10 (theta, phi) grid per player".into(),
        "the grid mean of Pi_A on the slice equals (alpha+beta+gamma+delta)/4 for every k".into(),
    ]
}

fn q_pd_utility_rises_with_k(ctx: &mut Context) -> Outcome {
    let (h, v) = quantum_trend(ctx, GamePreset::PrisonersDilemma, Kind::Symmetric, true);
    Outcome::universal(&h, v, trend_notes())
}

fn q_pd_utility_irrational(ctx: &mut Context) -> Outcome {
    let (h, v) = quantum_trend(ctx, GamePreset::PrisonersDilemma, Kind::Symmetric, false);
    Outcome::universal(&h, v, trend_notes())
}

fn q_sh_utility_irrational(ctx: &mut Context) -> Outcome {
    let (h, v) = quantum_trend(ctx, GamePreset::StagHunt, Kind::Symmetric, false);
    Outcome::universal(&h, v, trend_notes())
}

fn q_cg_utility_irrational(ctx: &mut Context) -> Outcome {
    let (h, v) = quantum_trend(ctx, GamePreset::Chicken, Kind::Complementary, false);
    let (hs, _) = quantum_trend(ctx, GamePreset::Chicken, Kind::Symmetric, false);
    let mut notes = trend_notes();
    notes.push(format!(
        "with k' = k the statement gives {}",
        Verdict::from_points(&hs).as_str()
    ));
    Outcome::universal(&h, v, notes)
}

fn half_strategy_dependent(g: GamePreset) -> Outcome {
    let r = phased_extremes(&default_payoffs(g), 0.5, 0.5);
    let spread = r.max - r.min;
    Outcome::universal(
        &[spread > 1e-9],
        json!({"min_pi_a": r.min, "max_pi_a": r.max, "spread": spread}),
        vec!["at k = 0.5 every measurement element is I/4, so no choice of theta or phi moves Pi_A".into()],
    )
}

fn q_pd_half_dependent(_: &mut Context) -> Outcome {
    half_strategy_dependent(GamePreset::PrisonersDilemma)
}

fn q_sh_half_dependent(_: &mut Context) -> Outcome {
    half_strategy_dependent(GamePreset::StagHunt)
}

fn q_sh_max_midpoint(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::StagHunt);
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    for &k in &QUANTUM_KS {
        let s = slice_stats(ctx, &m, k, k);
        let h = s.at_midpoint >= s.max - 1e-9;
        rows.push(json!({"k": k, "max": s.max, "argmax_theta_a": s.argmax.0, "argmax_theta_b": s.argmax.1, "at_midpoint": s.at_midpoint, "holds": h}));
        holds.push(h);
    }
    Outcome::universal(&holds, json!({ "points": rows }), vec![])
}

fn q_cg_max_theta0(ctx: &mut Context) -> Outcome {
    let m = default_payoffs(GamePreset::Chicken);
    let mut holds = Vec::new();
    let mut rows = Vec::new();
    let mut by_mode: BTreeMap<&str, Vec<bool>> = BTreeMap::new();
    for kind in [Kind::Complementary, Kind::Symmetric] {
        for &k in &QUANTUM_KS {
            let kp = kprime_of(kind, k);
            let s = slice_stats(ctx, &m, k, kp);
            let h = s.max_on_theta0_lines >= s.max - 1e-9;
            let mode = if matches!(kind, Kind::Complementary) { "complementary" } else { "symmetric" };
            by_mode.entry(mode).or_default().push(h);
            rows.push(json!({"scenario": mode, "k": k, "kprime": kp, "max": s.max, "argmax_theta_a": s.argmax.0, "argmax_theta_b": s.argmax.1, "max_with_a_theta_zero": s.max_on_theta0_lines, "holds": h}));
            holds.push(h);
        }
    }
    let notes = by_mode
        .iter()
        .map(|(mode, h)| format!("{mode}: {}", Verdict::from_points(h).as_str()))
        .collect();
    Outcome::universal(&holds, json!({ "points": rows }), notes)
}

// ---------------------------------------------------------------------------
// registry

macro_rules! claim {
    ($id:literal, $topic:literal, $game:literal, $scenario:literal, $statement:literal, $eval:expr) => {
        ClaimSpec {
            id: $id,
            topic: $topic,
            game: $game,
            scenario: $scenario,
            statement: $statement,
            eval: $eval,
        }
    };
}

fn registry() -> Vec<ClaimSpec> {
    vec![
        claim!("classical.half-everywhere", "classical_ne", "all", "k = k' = 0.5",
            "Every profile is an equilibrium when both agents are maximally undecided, whatever the payoffs.", half_everywhere),
        claim!("classical.half-utility-constant", "classical_utility", "all", "k = k' = 0.5",
            "Both utilities are constant in the rational intents when both agents are maximally undecided.", half_utility_constant),
        claim!("classical.up-to-five", "classical_ne", "all", "all",
            "A bistable 2x2 game has at most five isolated equilibria: four pure corners and one mixed point.", up_to_five),
        claim!("classical.outcomes-non-factorisable", "classical_model", "all", "all",
            "The joint outcome probabilities of the deformed game do not factorise into the two marginals.", non_factorisable),
        claim!("classical.max-utility-when-rational", "classical_utility", "pd, sh, cg", "k = k'",
            "Alice's best attainable utility is highest when both agents are rational.", max_when_rational),
        claim!("pd.rational-single-ne", "classical_ne", "pd", "k = k' = 1",
            "The rational prisoner's dilemma has exactly one equilibrium.", |c| classical_claim(c, &pd(), &[Kind::Rational], false, |l| l.len() == 1)),
        claim!("pd.bistable-up-to-three", "classical_ne", "pd", "k = k', k' = 1, k' = 1 - k",
            "With at least one bistable agent the prisoner's dilemma has at most three equilibria.", |c| classical_claim(c, &pd(), &BISTABLE, false, |l| l.len() <= 3)),
        claim!("pd.symmetric-families", "classical_ne", "pd", "k = k'",
            "With equal bistability the equilibria lie within {(0,0), (1,1), mixed} or within {(0,1), (1,0), mixed}.", |c| classical_claim(c, &pd(), &[Kind::Symmetric], false, |l| subset(l, &DIAGONAL) || subset(l, &OFF_DIAGONAL))),
        claim!("pd.one-rational-family", "classical_ne", "pd", "k' = 1",
            "With a rational Bob only (0,0), (1,1) and the mixed point can be equilibria.", |c| classical_claim(c, &pd(), &[Kind::OneRational], false, |l| subset(l, &DIAGONAL))),
        claim!("pd.complementary-no-diagonal", "classical_ne", "pd", "k' = 1 - k",
            "With complementary bistability neither (0,0) nor (1,1) is an equilibrium.", |c| classical_claim(c, &pd(), &[Kind::Complementary], false, |l| !has(l, "(0,0)") && !has(l, "(1,1)"))),
        claim!("pd.mixed-can-be-ne", "classical_ne", "pd", "all",
            "The mixed point can be an equilibrium of the prisoner's dilemma.", |c| classical_claim(c, &pd(), &EVERY, true, |l| has(l, "mixed"))),
        claim!("pd.max-three", "classical_ne", "pd", "all",
            "The prisoner's dilemma never has more than three equilibria.", |c| classical_claim(c, &pd(), &EVERY, false, |l| l.len() <= 3)),
        claim!("pd.utility-flattens-toward-half", "classical_utility", "pd", "k = k'",
            "As k falls toward 0.5 Alice's utility depends less and less on the rational intents, and not at all at 0.5.", pd_flattens),
        claim!("pd.utility-max-with-rational-opponent", "classical_utility", "pd", "k' = 1 vs k = k'",
            "Alice's best attainable utility is at least as high against a rational Bob as against an equally bistable one.", pd_rational_opponent),
        claim!("pd.complementary-max-when-cooperating", "classical_utility", "pd", "k' = 1 - k",
            "With complementary bistability Alice's utility peaks when she intends to cooperate.", pd_complementary_cooperate),
        claim!("pd.complementary-lowest-max", "classical_utility", "pd", "k' = 1 - k",
            "Alice's best attainable utility is lower with complementary bistability than in the symmetric and rational-Bob scenarios.", pd_complementary_lowest),
        claim!("delta-m.increasing-in-bc-when-rational", "motivation", "donation", "k = k' = 1",
            "For rational agents the motivation to cooperate grows with the benefit to cost ratio.", dm_increasing_bc),
        claim!("delta-m.decreasing-as-k-decreases", "motivation", "donation", "k = k'",
            "The motivation to cooperate falls as k decreases.", dm_decreasing_k),
        claim!("delta-m.less-sensitive-when-irrational", "motivation", "donation", "k = k'",
            "The motivation to cooperate responds less to the benefit to cost ratio as k decreases.", dm_sensitivity),
        claim!("delta-m.defect-at-half", "motivation", "donation", "k = k' = 0.5",
            "Maximally undecided agents lean toward defection whatever the benefit to cost ratio.", dm_defect_half),
        claim!("sh.rational-pure-pair", "classical_ne", "sh", "k = k' = 1",
            "In the rational stag hunt (0,0) and (1,1) are always equilibria.", |c| classical_claim(c, &sh(), &[Kind::Rational], false, |l| has(l, "(0,0)") && has(l, "(1,1)"))),
        claim!("sh.rational-up-to-three", "classical_ne", "sh", "k = k' = 1",
            "The rational stag hunt has at most three equilibria.", |c| classical_claim(c, &sh(), &[Kind::Rational], false, |l| l.len() <= 3)),
        claim!("sh.symmetric-up-to-three", "classical_ne", "sh", "k = k'",
            "With equal bistability the stag hunt has at most three equilibria.", |c| classical_claim(c, &sh(), &[Kind::Symmetric], false, |l| l.len() <= 3)),
        claim!("sh.one-rational-excludes-01", "classical_ne", "sh", "k' = 1",
            "With a rational Bob, (0,1) is never an equilibrium of the stag hunt.", |c| classical_claim(c, &sh(), &[Kind::OneRational], false, |l| !has(l, "(0,1)"))),
        claim!("sh.complementary-family", "classical_ne", "sh", "k' = 1 - k",
            "With complementary bistability the stag hunt equilibria lie within {(0,1), (1,0), mixed}.", |c| classical_claim(c, &sh(), &[Kind::Complementary], false, |l| subset(l, &OFF_DIAGONAL))),
        claim!("cg.rational-family", "classical_ne", "cg", "k = k' = 1",
            "The rational chicken game has (0,1) and (1,0) as equilibria and nothing beyond the mixed point.", |c| classical_claim(c, &cg(), &[Kind::Rational], false, |l| has(l, "(0,1)") && has(l, "(1,0)") && subset(l, &OFF_DIAGONAL))),
        claim!("cg.symmetric-families", "classical_ne", "cg", "k = k'",
            "With equal bistability the chicken game equilibria lie within {(0,0), (1,1), mixed} or within {(0,1), (1,0), mixed}.", |c| classical_claim(c, &cg(), &[Kind::Symmetric], false, |l| subset(l, &DIAGONAL) || subset(l, &OFF_DIAGONAL))),
        claim!("cg.one-rational-up-to-three", "classical_ne", "cg", "k' = 1",
            "With a rational Bob the chicken game has at most three equilibria.", |c| classical_claim(c, &cg(), &[Kind::OneRational], false, |l| l.len() <= 3)),
        claim!("cg.complementary-families", "classical_ne", "cg", "k' = 1 - k",
            "With complementary bistability the chicken game equilibria lie within {(0,1), (1,0), mixed} or within {(0,0), (1,1), mixed}.", |c| classical_claim(c, &cg(), &[Kind::Complementary], false, |l| subset(l, &DIAGONAL) || subset(l, &OFF_DIAGONAL))),
        claim!("quantum.half-ne-independent", "quantum_ne", "pd, sh, cg", "k = k' = 0.5",
            "At k = k' = 0.5 the equilibrium conditions hold for every pair of quantum strategies.", q_half_ne_independent),
        claim!("quantum.ne-independent-of-k", "quantum_ne", "pd, sh, cg", "k = k', k' = 1 - k",
            "Without phases the quantum equilibria do not depend on k and k' and coincide with the rational classical ones.", q_ne_independent_of_k),
        claim!("quantum.up-to-three", "quantum_ne", "pd, sh, cg", "k = k', k' = 1 - k",
            "Each quantum bistable game has at most three equilibria.", q_up_to_three),
        claim!("quantum.pd.symmetric-midpoint-slice", "quantum_ne", "pd", "k = k'",
            "For 0.5 < k = k' <= 1, (pi/2, pi/2) is an equilibrium of the quantum prisoner's dilemma (real strategies).", q_pd_midpoint_slice),
        claim!("quantum.pd.symmetric-midpoint-phases", "quantum_ne", "pd", "k = k'",
            "For 0.5 < k = k' <= 1, (pi/2, pi/2) is an equilibrium of the quantum prisoner's dilemma when phases may also be varied.", q_pd_midpoint_phases),
        claim!("quantum.pd.complementary-origin", "quantum_ne", "pd", "k' = 1 - k",
            "For 0.5 < k = 1 - k' <= 1, (0, 0) is an equilibrium of the quantum prisoner's dilemma.", q_pd_complementary_origin),
        claim!("quantum.pd.utility-increases-with-k", "quantum_utility", "pd", "k = k'",
            "In the quantum prisoner's dilemma Alice's utility grows with k.", q_pd_utility_rises_with_k),
        claim!("quantum.pd.utility-increases-with-irrationality", "quantum_utility", "pd", "k = k'",
            "In the quantum prisoner's dilemma Alice's utility grows as she becomes less rational.", q_pd_utility_irrational),
        claim!("quantum.pd.half-strategy-dependent", "quantum_utility", "pd", "k = k' = 0.5",
            "At k = k' = 0.5 the quantum strategies, through entanglement and phase, still move Alice's utility.", q_pd_half_dependent),
        claim!("quantum.sh.symmetric-midpoint", "quantum_ne", "sh", "k = k'",
            "For 0.5 < k = k' <= 1, (pi/2, pi/2) is an equilibrium of the quantum stag hunt.", q_sh_midpoint),
        claim!("quantum.sh.symmetric-origin", "quantum_ne", "sh", "k = k'",
            "For 0.5 < k = k' <= 1, (0, 0) is an equilibrium of the quantum stag hunt.", q_sh_origin),
        claim!("quantum.sh.symmetric-mixed", "quantum_ne", "sh", "k = k'",
            "For 0.5 < k = k' <= 1, theta_a = theta_b = acos(sqrt(t*)) is a mixed equilibrium of the quantum stag hunt.", q_sh_mixed),
        claim!("quantum.sh.complementary-pure", "quantum_ne", "sh", "k' = 1 - k",
            "For 0.5 < k = 1 - k' <= 1, (pi/2, 0) and (0, pi/2) are equilibria of the quantum stag hunt.", q_sh_complementary_pure),
        claim!("quantum.sh.complementary-mixed", "quantum_ne", "sh", "k' = 1 - k",
            "For 0.5 < k = 1 - k' <= 1, theta_a = theta_b = acos(sqrt(t*)) is an equilibrium of the quantum stag hunt.", q_sh_complementary_mixed),
        claim!("quantum.sh.utility-max-near-midpoint", "quantum_utility", "sh", "k = k'",
            "In the quantum stag hunt Alice's utility peaks as both strategies approach (pi/2, pi/2).", q_sh_max_midpoint),
        claim!("quantum.sh.utility-increases-with-irrationality", "quantum_utility", "sh", "k = k'",
            "In the quantum stag hunt Alice's utility grows as k decreases.", q_sh_utility_irrational),
        claim!("quantum.sh.half-strategy-dependent", "quantum_utility", "sh", "k = k' = 0.5",
            "At k = k' = 0.5 Alice's utility in the quantum stag hunt depends on the strategies played.", q_sh_half_dependent),
        claim!("quantum.cg.complementary-first", "quantum_ne", "cg", "k' = 1 - k",
            "For 0.5 < k = 1 - k' <= 1, (0, pi/2), (pi/2, 0) and theta_a = theta_b = acos(sqrt(t*)) are equilibria of the quantum chicken game.", q_cg_first),
        claim!("quantum.cg.complementary-second", "quantum_ne", "cg", "k' = 1 - k",
            "For 0.5 < k = 1 - k' <= 1, (0, 0), (pi/2, pi/2) and theta_a = theta_b = acos(sqrt(t*)) are equilibria of the quantum chicken game.", q_cg_second),
        claim!("quantum.cg.utility-increases-with-irrationality", "quantum_utility", "cg", "k' = 1 - k",
            "In the quantum chicken game Alice's utility grows as k decreases.", q_cg_utility_irrational),
        claim!("quantum.cg.max-at-theta-zero", "quantum_utility", "cg", "k' = 1 - k, k = k'",
            "In the quantum chicken game Alice's utility peaks when one of the two strategies has theta = 0.", q_cg_max_theta0),
    ]
}

/// Identifiers of every registered claim, in report order.
pub fn registry_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

/// Recomputes every registered claim.
pub fn verify_claims(ne: NeOptions<f64>, qgrid: QuantumGrid<f64>) -> Result<ClaimReport> {
    let mut ctx = Context::new(ne, qgrid)?;
    let claims: Vec<ClaimRecord> = registry()
        .into_iter()
        .map(|spec| {
            let o = (spec.eval)(&mut ctx);
            ClaimRecord {
                id: spec.id.into(),
                topic: spec.topic.into(),
                game: spec.game.into(),
                scenario: spec.scenario.into(),
                statement: spec.statement.into(),
                verdict: o.verdict,
                points_evaluated: o.evaluated,
                points_holding: o.holding,
                computed: o.computed,
                notes: o.notes,
            }
        })
        .collect();
    let count = |v: Verdict| claims.iter().filter(|c| c.verdict == v).count();
    Ok(ClaimReport {
        settings: ctx.settings(),
        total: claims.len(),
        confirmed: count(Verdict::Confirmed),
        refuted_on_grid: count(Verdict::RefutedOnGrid),
        boundary_sensitive: count(Verdict::BoundarySensitive),
        claims,
    })
}
