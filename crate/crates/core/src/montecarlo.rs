//! Sampling estimates of outcome frequencies and utilities.
//!
//! Classical trials follow the flip model: each agent draws a rational intent
//! (`Y` with probability `p`), keeps it with probability `k` and switches to
//! the other option otherwise. Quantum trials draw one of the four Kraus
//! outcomes from its expectation value.
//!
//! Trials are split into chunks of [`CHUNK_TRIALS`]; chunk `i` draws from
//! ChaCha8 seeded with the run seed on stream `i`. Counts are integers, so a
//! report depends only on `(spec, seed)` and not on the thread count.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classical::ClassicalProfile;
use crate::error::{Error, Result};
use crate::model::{BistableParam, PayoffMatrix};
use crate::quantum::{kraus_set, QuantumProfile, Validity};
use crate::scalar::Scalar;

/// Trials per PRNG stream.
pub const CHUNK_TRIALS: u64 = 1 << 16;

/// Identifier of the sampling scheme, recorded in every report.
pub const ALGORITHM: &str = "chacha8/seed_from_u64+stream-per-65536-trials/v1";

/// Probabilities this far below zero are clamped rather than refused.
const CLAMP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SimulationTarget<T> {
    Classical {
        profile: ClassicalProfile<T>,
        k: BistableParam<T>,
        kprime: BistableParam<T>,
    },
    Quantum {
        profile: QuantumProfile<T>,
        k: BistableParam<T>,
        kprime: BistableParam<T>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationSpec<T> {
    pub trials: u64,
    pub seed: u64,
    pub payoffs: PayoffMatrix<T>,
    pub target: SimulationTarget<T>,
}

/// Sample means with standard errors (sample standard deviation over `sqrt(trials)`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateReport<T> {
    pub algorithm: &'static str,
    pub engine: &'static str,
    pub trials: u64,
    pub seed: u64,
    /// Outcome counts `(Y,Y), (Y,X), (X,Y), (X,X)`; `cc, cd, dc, dd` for the quantum game.
    pub counts: [u64; 4],
    pub frequencies: [T; 4],
    pub frequency_std_errors: [T; 4],
    pub pi_a: T,
    pub pi_a_std_error: T,
    pub pi_b: T,
    pub pi_b_std_error: T,
    /// Fraction of trials in which Alice ended on the first option.
    pub alice_first: T,
    pub alice_first_std_error: T,
    pub bob_first: T,
    pub bob_first_std_error: T,
}

/// Mean and standard error of a discrete variable from value counts.
fn mean_and_error(counts: &[u64; 4], values: [f64; 4], n: u64) -> (f64, f64) {
    let nf = n as f64;
    let mean = counts.iter().zip(values).map(|(c, v)| *c as f64 * v).sum::<f64>() / nf;
    if n < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = counts
        .iter()
        .zip(values)
        .map(|(c, v)| *c as f64 * (v - mean) * (v - mean))
        .sum();
    (mean, (ss / (nf - 1.0)).sqrt() / nf.sqrt())
}

fn report<T: Scalar>(
    engine: &'static str,
    spec: &SimulationSpec<T>,
    counts: [u64; 4],
) -> EstimateReport<T> {
    let n = spec.trials;
    let lit = T::lit;
    let indicator = |i: usize| {
        let mut v = [0.0; 4];
        v[i] = 1.0;
        v
    };
    let mut frequencies = [T::zero(); 4];
    let mut frequency_std_errors = [T::zero(); 4];
    for i in 0..4 {
        let (m, e) = mean_and_error(&counts, indicator(i), n);
        frequencies[i] = lit(m);
        frequency_std_errors[i] = lit(e);
    }
    let (pa, pa_e) = mean_and_error(&counts, spec.payoffs.alice_weights().map(|w| w.as_f64()), n);
    let (pb, pb_e) = mean_and_error(&counts, spec.payoffs.bob_weights().map(|w| w.as_f64()), n);
    let (af, af_e) = mean_and_error(&counts, [1.0, 1.0, 0.0, 0.0], n);
    let (bf, bf_e) = mean_and_error(&counts, [1.0, 0.0, 1.0, 0.0], n);
    EstimateReport {
        algorithm: ALGORITHM,
        engine,
        trials: n,
        seed: spec.seed,
        counts,
        frequencies,
        frequency_std_errors,
        pi_a: lit(pa),
        pi_a_std_error: lit(pa_e),
        pi_b: lit(pb),
        pi_b_std_error: lit(pb_e),
        alice_first: lit(af),
        alice_first_std_error: lit(af_e),
        bob_first: lit(bf),
        bob_first_std_error: lit(bf_e),
    }
}

/// Runs `trials` draws of `draw` split across PRNG streams and tallies the outcome indices.
fn tally(trials: u64, seed: u64, draw: impl Fn(&mut ChaCha8Rng) -> usize + Sync) -> [u64; 4] {
    let chunks = trials.div_ceil(CHUNK_TRIALS);
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(chunk);
            let len = CHUNK_TRIALS.min(trials - chunk * CHUNK_TRIALS);
            let mut counts = [0u64; 4];
            for _ in 0..len {
                counts[draw(&mut rng)] += 1;
            }
            counts
        })
        .reduce(
            || [0u64; 4],
            |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]],
        )
}

fn check_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::config("simulate.trials", "must be >= 1"));
    }
    Ok(())
}

/// Flip-model estimate for a classical profile.
pub fn sample_classical<T: Scalar>(spec: &SimulationSpec<T>) -> Result<EstimateReport<T>> {
    check_trials(spec.trials)?;
    let SimulationTarget::Classical { profile, k, kprime } = spec.target else {
        return Err(Error::config("engine", "sample_classical needs a classical target"));
    };
    let (p, q) = (profile.p.value().as_f64(), profile.q.value().as_f64());
    let (k, kp) = (k.value().as_f64(), kprime.value().as_f64());
    let counts = tally(spec.trials, spec.seed, |rng| {
        let first = |rng: &mut ChaCha8Rng, intent: f64, keep: f64| {
            let wants_first = rng.gen::<f64>() < intent;
            let keeps = rng.gen::<f64>() < keep;
            wants_first == keeps
        };
        let a = first(rng, p, k);
        let b = first(rng, q, kp);
        2 * usize::from(!a) + usize::from(!b)
    });
    Ok(report("classical", spec, counts))
}

/// Categorical estimate over the Kraus outcomes. Refuses Kraus sets with a
/// negative eigenvalue.
pub fn sample_quantum<T: Scalar>(spec: &SimulationSpec<T>) -> Result<EstimateReport<T>> {
    check_trials(spec.trials)?;
    let SimulationTarget::Quantum { profile, k, kprime } = spec.target else {
        return Err(Error::config("engine", "sample_quantum needs a quantum target"));
    };
    let ks = kraus_set(k, kprime);
    let outcome = ks.outcome(profile.alice, profile.bob);
    let probs = outcome.probs.map(|p| p.as_f64());
    if ks.validity() == Validity::QuasiProbability || probs.iter().any(|p| *p < -CLAMP_TOL) {
        return Err(ks.positivity_error(&outcome.probs));
    }
    let clamped = probs.map(|p| p.max(0.0));
    let total: f64 = clamped.iter().sum();
    let mut cumulative = [0.0; 3];
    let mut acc = 0.0;
    for i in 0..3 {
        acc += clamped[i] / total;
        cumulative[i] = acc;
    }
    let counts = tally(spec.trials, spec.seed, |rng| {
        let u = rng.gen::<f64>();
        cumulative.iter().position(|c| u < *c).unwrap_or(3)
    });
    Ok(report("quantum", spec, counts))
}

/// Dispatches on the target kind.
pub fn simulate<T: Scalar>(spec: &SimulationSpec<T>) -> Result<EstimateReport<T>> {
    match spec.target {
        SimulationTarget::Classical { .. } => sample_classical(spec),
        SimulationTarget::Quantum { .. } => sample_quantum(spec),
    }
}
