//! Nash equilibria of the quantum game.

use rayon::prelude::*;
use serde::Serialize;

use super::linalg::Operator2;
use super::povm::{kraus_set, KrausSet, Validity};
use super::strategy::{entangled_state, strategy_unitary, QuantumStrategy};
use crate::classical::Certification;
use crate::error::{Error, Result};
use crate::model::{BistableParam, PayoffMatrix};
use crate::scalar::{linspace, Scalar};

/// `1 - 2(k + k' - 2kk')`, the factor multiplying both equilibrium conditions
/// on the `phi = 0` slice. Equal to `(2k - 1)(2k' - 1)`.
pub fn f_factor<T: Scalar>(k: BistableParam<T>, kprime: BistableParam<T>) -> T {
    let (k, kp) = (k.value(), kprime.value());
    T::one() - T::two() * (k + kp - T::two() * k * kp)
}

/// Strategies of both players.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumProfile<T> {
    pub alice: QuantumStrategy<T>,
    pub bob: QuantumStrategy<T>,
}

impl<T: Scalar> QuantumProfile<T> {
    pub fn new(alice: QuantumStrategy<T>, bob: QuantumStrategy<T>) -> Self {
        QuantumProfile { alice, bob }
    }

    /// Profile on the `phi = 0` slice.
    pub fn real(theta_a: T, theta_b: T) -> Result<Self> {
        Ok(QuantumProfile {
            alice: QuantumStrategy::real(theta_a)?,
            bob: QuantumStrategy::real(theta_b)?,
        })
    }
}

/// Sign analysis of the two slice conditions at one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NeConditionReport<T> {
    pub theta_a: T,
    pub theta_b: T,
    pub x_a: T,
    pub x_b: T,
    pub f: T,
    /// `Gamma cos^2(theta_b/2) + beta - delta`.
    pub bracket_alice: T,
    /// `Gamma cos^2(theta_a/2) + beta - delta`.
    pub bracket_bob: T,
    pub alice_holds: bool,
    pub bob_holds: bool,
    pub is_equilibrium: bool,
}

/// Evaluates `f (x* - x) [Gamma y* + beta - delta] >= 0` for every deviation
/// `x = cos^2(theta/2)`, for both players.
///
/// The left side is linear in `x`, so it holds for all deviations iff the
/// candidate sits at the end of `[0, 1]` the coefficient points to, or the
/// coefficient vanishes.
pub fn ne_condition_closed_form<T: Scalar>(
    m: &PayoffMatrix<T>,
    candidate: QuantumProfile<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> Result<NeConditionReport<T>> {
    if candidate.alice.phi() != T::zero() || candidate.bob.phi() != T::zero() {
        return Err(Error::OutOfScope(
            "the closed-form condition covers phi_a = phi_b = 0 only".into(),
        ));
    }
    let f = f_factor(k, kprime);
    let (x_a, x_b) = (candidate.alice.cos2_half(), candidate.bob.cos2_half());
    let g = m.interaction();
    let bracket_alice = g * x_b + m.beta - m.delta;
    let bracket_bob = g * x_a + m.beta - m.delta;
    let slack = T::ne_slack();
    let alice_holds = deviation_gain(f * bracket_alice, x_a) <= slack;
    let bob_holds = deviation_gain(f * bracket_bob, x_b) <= slack;
    Ok(NeConditionReport {
        theta_a: candidate.alice.theta(),
        theta_b: candidate.bob.theta(),
        x_a,
        x_b,
        f,
        bracket_alice,
        bracket_bob,
        alice_holds,
        bob_holds,
        is_equilibrium: alice_holds && bob_holds,
    })
}

fn deviation_gain<T: Scalar>(c: T, x: T) -> T {
    if c > T::zero() {
        c * (T::one() - x)
    } else {
        -c * x
    }
}

/// Resolution of the quantum equilibrium search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumGrid<T> {
    /// Points on each `theta` axis over `[0, pi]`; at least 61.
    pub theta_points: usize,
    /// Points on each `phi` axis over `[0, pi/2]`, used when `include_phase`.
    pub phi_points: usize,
    pub include_phase: bool,
    /// Subdivisions per grid cell in the local refinement pass.
    pub refine_factor: usize,
    pub slack: T,
}

impl<T: Scalar> Default for QuantumGrid<T> {
    fn default() -> Self {
        QuantumGrid {
            theta_points: 181,
            phi_points: 46,
            include_phase: false,
            refine_factor: 10,
            slack: T::ne_slack(),
        }
    }
}

impl<T: Scalar> QuantumGrid<T> {
    pub fn validate(&self) -> Result<()> {
        if self.theta_points < 61 {
            return Err(Error::config(
                "grid.theta_points",
                format!("{} < 61", self.theta_points),
            ));
        }
        if self.include_phase && self.phi_points < 2 {
            return Err(Error::config(
                "grid.phi_points",
                format!("{} < 2 with phases enabled", self.phi_points),
            ));
        }
        if !(self.slack >= T::zero()) {
            return Err(Error::config("grid.slack", "must be non-negative"));
        }
        Ok(())
    }

    fn thetas(&self) -> Vec<T> {
        linspace(T::zero(), T::PI(), self.theta_points)
    }

    fn phis(&self) -> Vec<T> {
        linspace(T::zero(), T::FRAC_PI_2(), self.phi_points)
    }

    fn theta_step(&self) -> T {
        T::PI() / T::from_usize(self.theta_points - 1).unwrap()
    }

    fn phi_step(&self) -> T {
        T::FRAC_PI_2() / T::from_usize(self.phi_points.max(2) - 1).unwrap()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateSource {
    /// A point of the strategy grid.
    Grid,
    /// `cos^2(theta*/2) = (delta - beta) / Gamma` on both axes.
    Indifference,
    /// Supplied by the caller.
    Requested,
}

/// A certified epsilon-equilibrium of the quantum game.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumEquilibrium<T> {
    pub theta_a: T,
    pub theta_b: T,
    pub phi_a: T,
    pub phi_b: T,
    pub x_a: T,
    pub x_b: T,
    pub gain_alice: T,
    pub gain_bob: T,
    pub source: CandidateSource,
    pub certification: Certification,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantumNeReport<T> {
    pub k: T,
    pub kprime: T,
    pub f: T,
    pub validity: Validity,
    pub grid: QuantumGrid<T>,
    /// Every grid profile on the `phi = 0` slice is an equilibrium.
    pub everywhere_on_slice: bool,
    /// Number of slice grid profiles that passed certification.
    pub slice_certified: usize,
    /// Certified slice equilibria; empty when `everywhere_on_slice`.
    pub slice_equilibria: Vec<QuantumEquilibrium<T>>,
    /// Slice equilibria and requested candidates that also resist deviations
    /// in phase. `None` unless phases are enabled.
    pub phase_equilibria: Option<Vec<QuantumEquilibrium<T>>>,
}

/// Utilities with precomputed single-qubit unitaries.
struct Evaluator<'a, T> {
    m: &'a PayoffMatrix<T>,
    ks: &'a KrausSet<T>,
}

impl<T: Scalar> Evaluator<'_, T> {
    fn utilities(&self, ua: &Operator2<T>, ub: &Operator2<T>) -> (T, T) {
        let (p, _) = self.ks.expectations(&entangled_state(ua, ub));
        let dot = |w: [T; 4]| p.iter().zip(w.iter()).map(|(a, b)| *a * *b).sum::<T>();
        (dot(self.m.alice_weights()), dot(self.m.bob_weights()))
    }

    /// Largest gain of each player over the given deviations.
    fn gains(
        &self,
        sa: QuantumStrategy<T>,
        sb: QuantumStrategy<T>,
        alice_devs: &[Operator2<T>],
        bob_devs: &[Operator2<T>],
    ) -> (T, T) {
        let (ua, ub) = (strategy_unitary(sa), strategy_unitary(sb));
        let here = self.utilities(&ua, &ub);
        let ga = alice_devs
            .iter()
            .map(|d| self.utilities(d, &ub).0 - here.0)
            .fold(T::zero(), T::max);
        let gb = bob_devs
            .iter()
            .map(|d| self.utilities(&ua, d).1 - here.1)
            .fold(T::zero(), T::max);
        (ga, gb)
    }
}

fn neighbourhood<T: Scalar>(center: T, step: T, lo: T, hi: T, r: usize) -> Vec<T> {
    let r_t = T::from_usize(r).unwrap();
    (0..=2 * r)
        .map(|j| center + step * (T::from_usize(j).unwrap() - r_t) / r_t)
        .filter(|x| *x >= lo && *x <= hi)
        .collect()
}

/// Deviation strategies for a player currently at `s`: the whole grid (with
/// phases if enabled) plus a refined neighbourhood of `s`.
fn deviations<T: Scalar>(grid: &QuantumGrid<T>, s: QuantumStrategy<T>, base: &[Operator2<T>]) -> Vec<Operator2<T>> {
    let r = grid.refine_factor.max(1);
    let thetas = neighbourhood(s.theta(), grid.theta_step(), T::zero(), T::PI(), r);
    let phis = if grid.include_phase {
        neighbourhood(s.phi(), grid.phi_step(), T::zero(), T::FRAC_PI_2(), r)
    } else {
        vec![s.phi()]
    };
    let mut out = base.to_vec();
    for &t in &thetas {
        for &p in &phis {
            out.push(strategy_unitary(QuantumStrategy::new(t, p).unwrap()));
        }
    }
    out
}

/// Largest unilateral gains at `profile` over the grid deviations of `grid`
/// (including phases when enabled) and the refinement neighbourhood.
pub fn certify_quantum_profile<T: Scalar>(
    m: &PayoffMatrix<T>,
    ks: &KrausSet<T>,
    profile: QuantumProfile<T>,
    grid: &QuantumGrid<T>,
) -> (T, T) {
    let base = base_deviations(grid);
    let ev = Evaluator { m, ks };
    let da = deviations(grid, profile.alice, &base);
    let db = deviations(grid, profile.bob, &base);
    ev.gains(profile.alice, profile.bob, &da, &db)
}

fn base_deviations<T: Scalar>(grid: &QuantumGrid<T>) -> Vec<Operator2<T>> {
    let phis = if grid.include_phase {
        grid.phis()
    } else {
        vec![T::zero()]
    };
    let mut out = Vec::with_capacity(grid.theta_points * phis.len());
    for &t in &grid.thetas() {
        for &p in &phis {
            out.push(strategy_unitary(QuantumStrategy::new(t, p).unwrap()));
        }
    }
    out
}

fn equilibrium<T: Scalar>(
    p: QuantumProfile<T>,
    gains: (T, T),
    source: CandidateSource,
    certification: Certification,
) -> QuantumEquilibrium<T> {
    QuantumEquilibrium {
        theta_a: p.alice.theta(),
        theta_b: p.bob.theta(),
        phi_a: p.alice.phi(),
        phi_b: p.bob.phi(),
        x_a: p.alice.cos2_half(),
        x_b: p.bob.cos2_half(),
        gain_alice: gains.0,
        gain_bob: gains.1,
        source,
        certification,
    }
}

/// Searches the `phi = 0` slice for epsilon-equilibria and, when phases are
/// enabled, re-certifies the slice equilibria and `requested` profiles
/// against deviations in both angles.
///
/// Slice candidates are every grid profile, the indifference point and the
/// requested profiles with zero phases. A grid profile is kept when no grid
/// deviation gains more than `grid.slack`; every kept profile must then also
/// survive the refined neighbourhood.
pub fn ne_grid_search<T: Scalar>(
    m: &PayoffMatrix<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
    grid: &QuantumGrid<T>,
    requested: &[QuantumProfile<T>],
) -> Result<QuantumNeReport<T>> {
    grid.validate()?;
    let ks = kraus_set(k, kprime);
    let ev = Evaluator { m, ks: &ks };
    let slack = grid.slack;
    let thetas = grid.thetas();
    let n = thetas.len();
    let units: Vec<Operator2<T>> = thetas
        .iter()
        .map(|t| strategy_unitary(QuantumStrategy::real(*t).unwrap()))
        .collect();

    let table: Vec<Vec<(T, T)>> = (0..n)
        .into_par_iter()
        .map(|i| (0..n).map(|j| ev.utilities(&units[i], &units[j])).collect())
        .collect();
    let best_a: Vec<T> = (0..n)
        .map(|j| (0..n).map(|i| table[i][j].0).fold(T::neg_infinity(), T::max))
        .collect();
    let best_b: Vec<T> = (0..n)
        .map(|i| (0..n).map(|j| table[i][j].1).fold(T::neg_infinity(), T::max))
        .collect();
    let on_grid: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| best_a[j] - table[i][j].0 <= slack && best_b[i] - table[i][j].1 <= slack)
        .collect();
    let everywhere_on_slice = on_grid.len() == n * n;

    let mut slice_equilibria = Vec::new();
    if !everywhere_on_slice {
        let mut candidates: Vec<(QuantumProfile<T>, CandidateSource)> = on_grid
            .iter()
            .map(|&(i, j)| (QuantumProfile::real(thetas[i], thetas[j]).unwrap(), CandidateSource::Grid))
            .collect();
        if let Some(t) = m.indifference_point() {
            if t >= T::zero() && t <= T::one() {
                let th = T::two() * t.sqrt().acos();
                let th = th.max(T::zero()).min(T::PI());
                candidates.push((QuantumProfile::real(th, th)?, CandidateSource::Indifference));
            }
        }
        for r in requested {
            if r.alice.phi() == T::zero() && r.bob.phi() == T::zero() {
                candidates.push((*r, CandidateSource::Requested));
            }
        }
        let mut seen: Vec<(T, T)> = Vec::new();
        candidates.retain(|(p, _)| {
            let key = (p.alice.theta(), p.bob.theta());
            let dup = seen.iter().any(|s| {
                (s.0 - key.0).abs() <= T::identity_tol() && (s.1 - key.1).abs() <= T::identity_tol()
            });
            if !dup {
                seen.push(key);
            }
            !dup
        });

        let slice_grid = QuantumGrid {
            include_phase: false,
            ..*grid
        };
        let base = base_deviations(&slice_grid);
        slice_equilibria = candidates
            .par_iter()
            .filter_map(|&(p, source)| {
                let da = deviations(&slice_grid, p.alice, &base);
                let db = deviations(&slice_grid, p.bob, &base);
                let g = ev.gains(p.alice, p.bob, &da, &db);
                if g.0 > slack || g.1 > slack {
                    return None;
                }
                let closed = ne_condition_closed_form(m, p, k, kprime)
                    .map(|r| r.is_equilibrium)
                    .unwrap_or(false);
                let cert = if closed {
                    Certification::Both
                } else {
                    Certification::GridOracle
                };
                Some(equilibrium(p, g, source, cert))
            })
            .collect();
        slice_equilibria.sort_by(|a, b| {
            (a.theta_a, a.theta_b)
                .partial_cmp(&(b.theta_a, b.theta_b))
                .unwrap()
        });
    }

    let phase_equilibria = if grid.include_phase {
        let mut candidates: Vec<(QuantumProfile<T>, CandidateSource)> = if everywhere_on_slice {
            // Every slice profile qualifies; re-certify a sub-lattice of about 19 x 19.
            let stride = (n - 1).div_ceil(18).max(1);
            let mut idx: Vec<usize> = (0..n).step_by(stride).collect();
            if idx.last() != Some(&(n - 1)) {
                idx.push(n - 1);
            }
            let mut v = Vec::new();
            for &i in &idx {
                for &j in &idx {
                    v.push((QuantumProfile::real(thetas[i], thetas[j])?, CandidateSource::Grid));
                }
            }
            v
        } else {
            slice_equilibria
                .iter()
                .map(|e| (QuantumProfile::real(e.theta_a, e.theta_b).unwrap(), e.source))
                .collect()
        };
        for r in requested {
            if !candidates.iter().any(|(p, _)| p == r) {
                candidates.push((*r, CandidateSource::Requested));
            }
        }
        let base = base_deviations(grid);
        let mut found: Vec<QuantumEquilibrium<T>> = candidates
            .par_iter()
            .filter_map(|&(p, source)| {
                let da = deviations(grid, p.alice, &base);
                let db = deviations(grid, p.bob, &base);
                let g = ev.gains(p.alice, p.bob, &da, &db);
                (g.0 <= slack && g.1 <= slack)
                    .then(|| equilibrium(p, g, source, Certification::GridOracle))
            })
            .collect();
        found.sort_by(|a, b| {
            (a.theta_a, a.theta_b, a.phi_a, a.phi_b)
                .partial_cmp(&(b.theta_a, b.theta_b, b.phi_a, b.phi_b))
                .unwrap()
        });
        Some(found)
    } else {
        None
    };

    Ok(QuantumNeReport {
        k: k.value(),
        kprime: kprime.value(),
        f: f_factor(k, kprime),
        validity: ks.validity(),
        grid: *grid,
        everywhere_on_slice,
        slice_certified: on_grid.len(),
        slice_equilibria,
        phase_equilibria,
    })
}
