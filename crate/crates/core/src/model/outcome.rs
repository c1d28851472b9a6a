use serde::Serialize;

use super::{bistable_transform, BistableParam, Probability};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Joint probabilities of the outcomes `(Y,Y), (Y,X), (X,Y), (X,X)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutcomeDistribution<T> {
    eps: [T; 4],
}

impl<T: Scalar> OutcomeDistribution<T> {
    /// Validates that every entry lies in `[0, 1]` and that they sum to one.
    pub fn new(eps: [T; 4]) -> Result<Self> {
        for (i, &e) in eps.iter().enumerate() {
            if !(e >= T::zero() && e <= T::one()) {
                return Err(Error::domain(
                    ["eps1", "eps2", "eps3", "eps4"][i],
                    e.as_f64(),
                    "0 <= eps <= 1",
                ));
            }
        }
        let total: T = eps.iter().copied().sum();
        if (total - T::one()).abs() > T::identity_tol() {
            return Err(Error::domain("eps1 + eps2 + eps3 + eps4", total.as_f64(), "sum equal to 1"));
        }
        Ok(OutcomeDistribution { eps })
    }

    pub fn uniform() -> Self {
        OutcomeDistribution {
            eps: [T::lit(0.25); 4],
        }
    }

    pub fn as_array(&self) -> [T; 4] {
        self.eps
    }

    pub fn eps1(&self) -> T {
        self.eps[0]
    }
    pub fn eps2(&self) -> T {
        self.eps[1]
    }
    pub fn eps3(&self) -> T {
        self.eps[2]
    }
    pub fn eps4(&self) -> T {
        self.eps[3]
    }

    /// Probability that Alice ends up on `Y`.
    pub fn alice_marginal(&self) -> T {
        self.eps[0] + self.eps[1]
    }

    /// Probability that Bob ends up on `Y`.
    pub fn bob_marginal(&self) -> T {
        self.eps[0] + self.eps[2]
    }

    /// Expected payoff under per-outcome `weights`.
    pub fn expectation(&self, weights: [T; 4]) -> T {
        self.eps
            .iter()
            .zip(weights)
            .map(|(&e, w)| e * w)
            .sum()
    }
}

/// Joint law of the two agents' final choices when each independently
/// deforms a rational intent through its own bistable parameter.
pub fn outcome_distribution<T: Scalar>(
    p: Probability<T>,
    q: Probability<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> OutcomeDistribution<T> {
    let s = bistable_transform(p, k).value();
    let t = bistable_transform(q, kprime).value();
    let (ns, nt) = (T::one() - s, T::one() - t);
    OutcomeDistribution {
        eps: [s * t, s * nt, ns * t, ns * nt],
    }
}

/// `eps1 * eps4 - eps2 * eps3`; zero exactly when the joint law is a product of its marginals.
pub fn factorizability_defect<T: Scalar>(d: &OutcomeDistribution<T>) -> T {
    d.eps1() * d.eps4() - d.eps2() * d.eps3()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dist(p: f64, q: f64, k: f64, kp: f64) -> OutcomeDistribution<f64> {
        outcome_distribution(
            Probability::new(p).unwrap(),
            Probability::new(q).unwrap(),
            BistableParam::new(k).unwrap(),
            BistableParam::new(kp).unwrap(),
        )
    }

    #[test]
    fn rational_certain_choice() {
        assert_eq!(dist(1.0, 1.0, 1.0, 1.0).as_array(), [1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn half_forces_uniform() {
        assert_eq!(dist(0.9, 0.1, 0.5, 0.5).as_array(), [0.25; 4]);
    }

    // Two-agent flip model: intent ~ Bernoulli(p), kept with probability k.
    // Frozen values: p_k = 0.38, q_k' = 0.58.
    const FROZEN: [f64; 4] = [0.2204, 0.1596, 0.3596, 0.2604];

    #[test]
    fn matches_frozen_flip_model_values() {
        let d = dist(0.3, 0.6, 0.8, 0.9).as_array();
        for (a, b) in d.iter().zip(FROZEN) {
            assert!((a - b).abs() < 1e-12, "{d:?}");
        }
    }

    #[test]
    fn flip_model_oracle_agrees_with_frozen_values() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let n = 1_000_000;
        let mut counts = [0u64; 4];
        let draw = |rng: &mut ChaCha8Rng, intent: f64, keep: f64| {
            let y = rng.gen::<f64>() < intent;
            if rng.gen::<f64>() < keep { y } else { !y }
        };
        for _ in 0..n {
            let a = draw(&mut rng, 0.3, 0.8);
            let b = draw(&mut rng, 0.6, 0.9);
            counts[(!a as usize) * 2 + (!b as usize)] += 1;
        }
        for (c, e) in counts.iter().zip(FROZEN) {
            let f = *c as f64 / n as f64;
            let se = (e * (1.0 - e) / n as f64).sqrt();
            assert!((f - e).abs() <= 3.0 * se, "freq {f} vs {e}");
        }
    }

    #[test]
    fn uniform_has_no_defect() {
        assert_eq!(factorizability_defect(&OutcomeDistribution::<f64>::uniform()), 0.0);
    }

    #[test]
    fn constructor_validates() {
        assert!(OutcomeDistribution::new([0.5, 0.5, 0.0, 0.0]).is_ok());
        assert!(OutcomeDistribution::new([0.5, 0.6, 0.0, 0.0]).is_err());
        assert!(OutcomeDistribution::new([1.1, -0.1, 0.0, 0.0]).is_err());
    }

    #[test]
    fn defect_vanishes_on_a_thousand_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let d = dist(rng.gen(), rng.gen(), rng.gen(), rng.gen());
            assert!(factorizability_defect(&d).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn marginals_match_transforms(p in 0.0..=1.0_f64, q in 0.0..=1.0_f64, k in 0.0..=1.0_f64, kp in 0.0..=1.0_f64) {
            let d = dist(p, q, k, kp);
            let s = 1.0 - p - k + 2.0 * k * p;
            let t = 1.0 - q - kp + 2.0 * kp * q;
            prop_assert!((d.alice_marginal() - s).abs() < 1e-12);
            prop_assert!((d.bob_marginal() - t).abs() < 1e-12);
            prop_assert!((d.as_array().iter().sum::<f64>() - 1.0).abs() < 1e-12);
            prop_assert!(d.as_array().iter().all(|e| (0.0..=1.0).contains(e)));
        }
    }
}
