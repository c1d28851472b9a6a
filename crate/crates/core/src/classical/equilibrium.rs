use serde::Serialize;

use super::utility::{best_response_coefficient, utility_pair, ClassicalProfile};
use crate::error::{Error, Result};
use crate::model::{invert_transform, BistableParam, PayoffMatrix, Probability, ScenarioBinding};
use crate::scalar::{linspace, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EquilibriumKind {
    /// Both intents in `{0, 1}`.
    Pure,
    /// Interior indifference point.
    Mixed,
    /// Every profile is an equilibrium.
    Everywhere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    ClosedForm,
    GridOracle,
    Both,
}

/// A Nash equilibrium `(p*, q*)` of the deformed game.
///
/// For [`EquilibriumKind::Everywhere`] the coordinates are a representative
/// point (`0.5, 0.5`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquilibriumPoint<T> {
    pub p_star: T,
    pub q_star: T,
    pub kind: EquilibriumKind,
    pub certification: Certification,
}

/// Resolution of the deviation grid and the epsilon used to certify equilibria.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeOptions<T> {
    pub grid_points: usize,
    pub slack: T,
}

impl<T: Scalar> Default for NeOptions<T> {
    fn default() -> Self {
        NeOptions {
            grid_points: 101,
            slack: T::ne_slack(),
        }
    }
}

fn prob<T: Scalar>(x: T) -> Probability<T> {
    Probability::saturating(x)
}

/// Alice's best-response coefficient against Bob's intent `q`.
fn alice_coefficient<T: Scalar>(m: &PayoffMatrix<T>, k: BistableParam<T>, kp: BistableParam<T>, q: T) -> T {
    best_response_coefficient(m, prob(q), k, kp)
}

/// Bob's best-response coefficient against Alice's intent `p`.
fn bob_coefficient<T: Scalar>(m: &PayoffMatrix<T>, k: BistableParam<T>, kp: BistableParam<T>, p: T) -> T {
    best_response_coefficient(m, prob(p), kp, k)
}

/// Best gain available from a unilateral deviation when the own utility has
/// slope `coefficient` in the own intent and the player currently plays `x`.
fn deviation_gain<T: Scalar>(coefficient: T, x: T) -> T {
    if coefficient > T::zero() {
        coefficient * (T::one() - x)
    } else {
        -coefficient * x
    }
}

/// Largest utility gain each player obtains by deviating to any point of an
/// `n`-point grid on `[0, 1]`, evaluated by direct utility comparison.
pub fn certify_profile<T: Scalar>(
    m: &PayoffMatrix<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
    p: T,
    q: T,
    n: usize,
) -> (T, T) {
    let here = utility_pair(m, ClassicalProfile { p: prob(p), q: prob(q) }, k, kprime);
    let mut gain = (T::zero(), T::zero());
    for x in linspace(T::zero(), T::one(), n) {
        let a = utility_pair(m, ClassicalProfile { p: prob(x), q: prob(q) }, k, kprime).0;
        let b = utility_pair(m, ClassicalProfile { p: prob(p), q: prob(x) }, k, kprime).1;
        gain.0 = gain.0.max(a - here.0);
        gain.1 = gain.1.max(b - here.1);
    }
    gain
}

/// Interior equilibrium where both players are indifferent.
///
/// Both players are indifferent when the opponent's transformed probability
/// equals `t* = (delta - beta) / Gamma`; the intents follow by inverting each
/// transform, `p* = (t* - 1 + k) / (2k - 1)`. Returns `Ok(None)` when either
/// intent falls outside `[0, 1]`.
pub fn find_mixed_ne<T: Scalar>(
    m: &PayoffMatrix<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> Result<Option<EquilibriumPoint<T>>> {
    let t = m
        .indifference_point()
        .ok_or_else(|| Error::Degenerate("alpha - beta + delta - gamma = 0: no indifference point".into()))?;
    let p = invert_transform(t, k)?;
    let q = invert_transform(t, kprime)?;
    let tol = T::identity_tol();
    let in_range = |x: T| x >= -tol && x <= T::one() + tol;
    if !(in_range(p) && in_range(q)) {
        return Ok(None);
    }
    Ok(Some(EquilibriumPoint {
        p_star: p.max(T::zero()).min(T::one()),
        q_star: q.max(T::zero()).min(T::one()),
        kind: EquilibriumKind::Mixed,
        certification: Certification::ClosedForm,
    }))
}

/// Whether a player's best-response coefficient is (numerically) zero for
/// every opponent intent. The coefficient is affine in the opponent intent,
/// so checking both ends suffices.
fn vanishes_identically<T: Scalar>(coefficient_at: impl Fn(T) -> T, slack: T) -> bool {
    coefficient_at(T::zero()).abs() <= slack && coefficient_at(T::one()).abs() <= slack
}

/// All Nash equilibria for the scenario, using the default deviation grid.
pub fn find_equilibria<T: Scalar>(
    m: &PayoffMatrix<T>,
    scenario: &ScenarioBinding<T>,
) -> Result<Vec<EquilibriumPoint<T>>> {
    let (k, kprime) = scenario.resolve()?;
    Ok(find_equilibria_with(m, k, kprime, NeOptions::default()))
}

/// Enumerates the four pure corners by best-response sign, the interior
/// mixed point, and the degenerate case where every profile is an
/// equilibrium. Each point is re-certified against the deviation grid; at
/// most five points are returned.
///
/// When one player is indifferent along a whole edge, the equilibria form a
/// segment and only its end points are reported.
pub fn find_equilibria_with<T: Scalar>(
    m: &PayoffMatrix<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
    opts: NeOptions<T>,
) -> Vec<EquilibriumPoint<T>> {
    let slack = opts.slack;
    let ca = |q: T| alice_coefficient(m, k, kprime, q);
    let cb = |p: T| bob_coefficient(m, k, kprime, p);

    if vanishes_identically(ca, slack) && vanishes_identically(cb, slack) {
        return vec![EquilibriumPoint {
            p_star: T::half(),
            q_star: T::half(),
            kind: EquilibriumKind::Everywhere,
            certification: Certification::Both,
        }];
    }

    let mut points = Vec::with_capacity(5);
    for (p, q) in corners::<T>() {
        if deviation_gain(ca(q), p) <= slack && deviation_gain(cb(p), q) <= slack {
            points.push(EquilibriumPoint {
                p_star: p,
                q_star: q,
                kind: EquilibriumKind::Pure,
                certification: Certification::ClosedForm,
            });
        }
    }
    if let Ok(Some(mixed)) = find_mixed_ne(m, k, kprime) {
        let tol = T::identity_tol();
        let duplicate = points
            .iter()
            .any(|e| (e.p_star - mixed.p_star).abs() <= tol && (e.q_star - mixed.q_star).abs() <= tol);
        if !duplicate {
            points.push(mixed);
        }
    }

    points
        .into_iter()
        .filter_map(|mut e| {
            let (ga, gb) = certify_profile(m, k, kprime, e.p_star, e.q_star, opts.grid_points);
            (ga <= slack && gb <= slack).then(|| {
                e.certification = Certification::Both;
                e
            })
        })
        .collect()
}

fn corners<T: Scalar>() -> [(T, T); 4] {
    let (o, i) = (T::zero(), T::one());
    [(o, o), (o, i), (i, o), (i, i)]
}

/// One row of the candidate table: a candidate profile and whether each
/// player's equilibrium condition holds there.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateCheck<T> {
    pub candidate: String,
    pub p: Option<T>,
    pub q: Option<T>,
    pub alice_condition: bool,
    pub bob_condition: bool,
    pub equilibrium: bool,
    pub note: Option<String>,
}

/// Evaluates the five candidate equilibria `(0,0), (0,1), (1,0), (1,1)` and
/// `(P*, Q*)` against both players' conditions.
pub fn candidate_table<T: Scalar>(
    m: &PayoffMatrix<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
    opts: NeOptions<T>,
) -> Vec<CandidateCheck<T>> {
    let slack = opts.slack;
    let ca = |q: T| alice_coefficient(m, k, kprime, q);
    let cb = |p: T| bob_coefficient(m, k, kprime, p);
    let everywhere = vanishes_identically(ca, slack) && vanishes_identically(cb, slack);

    let mut rows: Vec<CandidateCheck<T>> = corners::<T>()
        .into_iter()
        .map(|(p, q)| {
            let a = deviation_gain(ca(q), p) <= slack;
            let b = deviation_gain(cb(p), q) <= slack;
            CandidateCheck {
                candidate: format!("({}, {})", p, q),
                p: Some(p),
                q: Some(q),
                alice_condition: a,
                bob_condition: b,
                equilibrium: a && b,
                note: None,
            }
        })
        .collect();

    let mixed = match find_mixed_ne(m, k, kprime) {
        Ok(Some(e)) => CandidateCheck {
            candidate: "(P*, Q*)".into(),
            p: Some(e.p_star),
            q: Some(e.q_star),
            alice_condition: true,
            bob_condition: true,
            equilibrium: true,
            note: None,
        },
        Ok(None) => {
            // report the out-of-range inversion
            let t = m.indifference_point().unwrap_or_else(T::nan);
            let p = invert_transform(t, k).ok();
            let q = invert_transform(t, kprime).ok();
            CandidateCheck {
                candidate: "(P*, Q*)".into(),
                p,
                q,
                alice_condition: q.is_some_and(|q| (T::zero()..=T::one()).contains(&q)),
                bob_condition: p.is_some_and(|p| (T::zero()..=T::one()).contains(&p)),
                equilibrium: false,
                note: Some("indifference point lies outside [0, 1]".into()),
            }
        }
        Err(e) => CandidateCheck {
            candidate: "(P*, Q*)".into(),
            p: None,
            q: None,
            alice_condition: everywhere,
            bob_condition: everywhere,
            equilibrium: everywhere,
            note: Some(e.to_string()),
        },
    };
    rows.push(mixed);
    if everywhere {
        for row in &mut rows {
            row.note.get_or_insert_with(|| "every profile is an equilibrium".into());
        }
    }
    rows
}

/// Brute-force epsilon-Nash set on an `n x n` grid of intents: profiles where
/// no deviation to another grid intent gains more than `slack`.
pub fn grid_equilibria<T: Scalar>(
    m: &PayoffMatrix<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
    n: usize,
    slack: T,
) -> Vec<(T, T)> {
    let xs = linspace(T::zero(), T::one(), n);
    let table: Vec<Vec<(T, T)>> = xs
        .iter()
        .map(|&p| {
            xs.iter()
                .map(|&q| utility_pair(m, ClassicalProfile { p: prob(p), q: prob(q) }, k, kprime))
                .collect()
        })
        .collect();
    let best_a: Vec<T> = (0..n)
        .map(|j| (0..n).map(|i| table[i][j].0).fold(T::neg_infinity(), T::max))
        .collect();
    let best_b: Vec<T> = (0..n)
        .map(|i| (0..n).map(|j| table[i][j].1).fold(T::neg_infinity(), T::max))
        .collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if best_a[j] - table[i][j].0 <= slack && best_b[i] - table[i][j].1 <= slack {
                out.push((xs[i], xs[j]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd() -> PayoffMatrix<f64> {
        PayoffMatrix::new(3.0, 0.0, 1.0, 5.0).unwrap()
    }
    fn k(x: f64) -> BistableParam<f64> {
        BistableParam::new(x).unwrap()
    }
    fn coords(v: &[EquilibriumPoint<f64>]) -> Vec<(f64, f64, EquilibriumKind)> {
        v.iter().map(|e| (e.p_star, e.q_star, e.kind)).collect()
    }

    #[test]
    fn rational_pd_has_two_pure_and_one_mixed() {
        let eq = find_equilibria(&pd(), &ScenarioBinding::Symmetric { k: 1.0 }).unwrap();
        let c = coords(&eq);
        assert_eq!(c.len(), 3);
        assert_eq!(&c[..2], &[(0.0, 0.0, EquilibriumKind::Pure), (1.0, 1.0, EquilibriumKind::Pure)]);
        assert!((c[2].0 - 5.0 / 7.0).abs() < 1e-15 && (c[2].1 - 5.0 / 7.0).abs() < 1e-15);
        assert!(eq.iter().all(|e| e.certification == Certification::Both));
        // brute force agrees on the grid part
        let grid = grid_equilibria(&pd(), k(1.0), k(1.0), 101, 1e-9);
        assert_eq!(grid, vec![(0.0, 0.0), (1.0, 1.0)]);
    }

    #[test]
    fn half_is_everywhere_for_any_payoffs() {
        for m in [pd(), PayoffMatrix::new(-2.0, 9.0, 0.5, 3.0).unwrap()] {
            let eq = find_equilibria(&m, &ScenarioBinding::Symmetric { k: 0.5 }).unwrap();
            assert_eq!(eq.len(), 1);
            assert_eq!(eq[0].kind, EquilibriumKind::Everywhere);
            assert_eq!(grid_equilibria(&m, k(0.5), k(0.5), 11, 1e-9).len(), 121);
        }
    }

    #[test]
    fn stag_hunt_rational_equilibria() {
        let sh = PayoffMatrix::new(4.0, 0.0, 3.0, 2.0).unwrap();
        let eq = find_equilibria(&sh, &ScenarioBinding::Symmetric { k: 1.0 }).unwrap();
        let c = coords(&eq);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], (0.0, 0.0, EquilibriumKind::Pure));
        assert_eq!(c[1], (1.0, 1.0, EquilibriumKind::Pure));
        // Gamma = 3, t* = 2/3; verified by indifference sampling below
        assert!((c[2].0 - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn mixed_point_makes_both_players_indifferent() {
        let m = pd();
        let e = find_mixed_ne(&m, k(1.0), k(1.0)).unwrap().unwrap();
        assert!((e.p_star - 5.0 / 7.0).abs() < 1e-15);
        let u = |p: f64, q: f64| utility_pair(&m, ClassicalProfile::new(p, q).unwrap(), k(1.0), k(1.0));
        let base_a = u(0.0, e.q_star).0;
        let base_b = u(e.p_star, 0.0).1;
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            assert!((u(x, e.q_star).0 - base_a).abs() < 1e-9);
            assert!((u(e.p_star, x).1 - base_b).abs() < 1e-9);
        }
    }

    #[test]
    fn mixed_point_out_of_range_is_none() {
        // (5/7 - 0.4) / 0.2 > 1
        let p = invert_transform(5.0 / 7.0, k(0.6)).unwrap();
        assert!((p - (5.0 / 7.0 - 0.4) / 0.2).abs() < 1e-12);
        assert!(p > 1.0);
        assert_eq!(find_mixed_ne(&pd(), k(0.6), k(0.6)).unwrap(), None);
    }

    #[test]
    fn mixed_point_degenerate_cases() {
        let flat = PayoffMatrix::new(2.0, 1.0, 3.0, 2.0).unwrap(); // Gamma = 0
        assert!(matches!(find_mixed_ne(&flat, k(1.0), k(1.0)), Err(Error::Degenerate(_))));
        assert!(matches!(find_mixed_ne(&pd(), k(0.5), k(1.0)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn one_player_at_half_gives_segment_end_points() {
        // Alice indifferent everywhere; Bob's coefficient is (2k'-1)(Gamma/2 + beta - delta) = -1.5 < 0
        let eq = find_equilibria(&pd(), &ScenarioBinding::Independent { k: 0.5, kprime: 1.0 }).unwrap();
        assert_eq!(coords(&eq), vec![(0.0, 0.0, EquilibriumKind::Pure), (1.0, 0.0, EquilibriumKind::Pure)]);
        let grid = grid_equilibria(&pd(), k(0.5), k(1.0), 11, 1e-9);
        assert_eq!(grid.len(), 11);
        assert!(grid.iter().all(|&(_, q)| q == 0.0));
    }

    #[test]
    fn complementary_pd() {
        let eq = find_equilibria(&pd(), &ScenarioBinding::Complementary { k: 0.9 }).unwrap();
        assert!(eq.len() <= 3);
        for e in &eq {
            let (ga, gb) = certify_profile(&pd(), k(0.9), k(0.1), e.p_star, e.q_star, 1001);
            assert!(ga <= 1e-9 && gb <= 1e-9);
        }
        assert!(!eq.iter().any(|e| e.kind == EquilibriumKind::Pure && e.p_star == e.q_star));
    }

    #[test]
    fn candidate_table_has_five_rows() {
        let rows = candidate_table(&pd(), k(1.0), k(1.0), NeOptions::default());
        assert_eq!(rows.len(), 5);
        let flags: Vec<bool> = rows.iter().map(|r| r.equilibrium).collect();
        assert_eq!(flags, vec![true, false, false, true, true]);
        let rows = candidate_table(&pd(), k(0.6), k(0.6), NeOptions::default());
        assert!(!rows[4].equilibrium);
        assert!(rows[4].note.is_some());
        let rows = candidate_table(&pd(), k(0.5), k(0.5), NeOptions::default());
        assert!(rows.iter().all(|r| r.equilibrium));
    }

    #[test]
    fn single_precision_enumeration() {
        let m = PayoffMatrix::new(3.0_f32, 0.0, 1.0, 5.0).unwrap();
        let eq = find_equilibria(&m, &ScenarioBinding::Symmetric { k: 1.0_f32 }).unwrap();
        assert_eq!(eq.len(), 3);
    }
}
