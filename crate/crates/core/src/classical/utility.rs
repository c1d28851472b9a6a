use serde::Serialize;

use crate::error::Result;
use crate::model::{bistable_transform, outcome_distribution, BistableParam, PayoffMatrix, Probability};
use crate::scalar::Scalar;

/// Rational intents of both agents: probabilities of choosing `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalProfile<T> {
    pub p: Probability<T>,
    pub q: Probability<T>,
}

impl<T: Scalar> ClassicalProfile<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        Ok(ClassicalProfile {
            p: Probability::named("p", p)?,
            q: Probability::named("q", q)?,
        })
    }
}

/// Expected payoffs `(Pi_A, Pi_B)` under the deformed joint law.
pub fn utility_pair<T: Scalar>(
    m: &PayoffMatrix<T>,
    profile: ClassicalProfile<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> (T, T) {
    let d = outcome_distribution(profile.p, profile.q, k, kprime);
    (d.expectation(m.alice_weights()), d.expectation(m.bob_weights()))
}

/// Derivative of a player's utility with respect to their own rational intent:
/// `(2k_self - 1) * (Gamma * t + beta - delta)` where `t` is the opponent's
/// transformed probability of `Y`.
///
/// Positive means the pure intent `1` is the best response, negative means
/// `0`, zero means every intent is a best response. The same expression
/// serves both players because Bob's payoffs are Alice's with `beta` and
/// `gamma` exchanged.
pub fn best_response_coefficient<T: Scalar>(
    m: &PayoffMatrix<T>,
    opponent_prob: Probability<T>,
    k_self: BistableParam<T>,
    k_opp: BistableParam<T>,
) -> T {
    let t = bistable_transform(opponent_prob, k_opp).value();
    k_self.slope() * (m.interaction() * t + m.beta - m.delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pd() -> PayoffMatrix<f64> {
        PayoffMatrix::new(3.0, 0.0, 1.0, 5.0).unwrap()
    }
    fn k(x: f64) -> BistableParam<f64> {
        BistableParam::new(x).unwrap()
    }
    fn prof(p: f64, q: f64) -> ClassicalProfile<f64> {
        ClassicalProfile::new(p, q).unwrap()
    }

    #[test]
    fn rational_mutual_y() {
        assert_eq!(utility_pair(&pd(), prof(1.0, 1.0), k(1.0), k(1.0)), (3.0, 3.0));
    }

    #[test]
    fn half_gives_mean_payoff() {
        for (p, q) in [(0.0, 0.0), (0.3, 0.9), (1.0, 0.2)] {
            let (a, b) = utility_pair(&pd(), prof(p, q), k(0.5), k(0.5));
            assert!((a - 2.25).abs() < 1e-12 && (b - 2.25).abs() < 1e-12);
        }
    }

    #[test]
    fn intermediate_profile_frozen_value() {
        // eps = (0.2204, 0.1596, 0.3596, 0.2604)
        // Pi_A = 3*0.2204 + 0*0.1596 + 1*0.3596 + 5*0.2604 = 2.3228
        // Pi_B = 3*0.2204 + 1*0.1596 + 0*0.3596 + 5*0.2604 = 2.1228
        let (a, b) = utility_pair(&pd(), prof(0.3, 0.6), k(0.8), k(0.9));
        assert!((a - 2.3228).abs() < 1e-12, "{a}");
        assert!((b - 2.1228).abs() < 1e-12, "{b}");
    }

    fn grid_argmax_p(q: f64, ks: f64, ko: f64) -> f64 {
        (0..=100)
            .map(|i| i as f64 / 100.0)
            .max_by(|&a, &b| {
                let ua = utility_pair(&pd(), prof(a, q), k(ks), k(ko)).0;
                let ub = utility_pair(&pd(), prof(b, q), k(ks), k(ko)).0;
                ua.partial_cmp(&ub).unwrap()
            })
            .unwrap()
    }

    #[test]
    fn coefficient_sign_matches_grid_best_response() {
        let c = best_response_coefficient(&pd(), Probability::one(), k(1.0), k(1.0));
        assert!((c - 2.0).abs() < 1e-15);
        assert_eq!(grid_argmax_p(1.0, 1.0, 1.0), 1.0);

        let c = best_response_coefficient(&pd(), Probability::zero(), k(1.0), k(1.0));
        assert!((c + 5.0).abs() < 1e-15);
        assert_eq!(grid_argmax_p(0.0, 1.0, 1.0), 0.0);
    }

    #[test]
    fn coefficient_vanishes_at_half() {
        let m = PayoffMatrix::new(7.0, -2.0, 4.0, 1.5).unwrap();
        for q in [0.0, 0.4, 1.0] {
            assert_eq!(best_response_coefficient(&m, Probability::new(q).unwrap(), k(0.5), k(0.9)), 0.0);
        }
    }

    proptest! {
        #[test]
        fn utilities_are_affine_in_each_intent(
            a in 0.0..=1.0_f64, b in 0.0..=1.0_f64, lam in 0.0..=1.0_f64,
            other in 0.0..=1.0_f64, ka in 0.0..=1.0_f64, kb in 0.0..=1.0_f64,
        ) {
            let m = pd();
            let mid = lam * a + (1.0 - lam) * b;
            let u = |p: f64, q: f64| utility_pair(&m, prof(p, q), k(ka), k(kb));
            let lhs = u(mid, other).0;
            let rhs = lam * u(a, other).0 + (1.0 - lam) * u(b, other).0;
            prop_assert!((lhs - rhs).abs() < 1e-12);
            let lhs = u(other, mid).1;
            let rhs = lam * u(other, a).1 + (1.0 - lam) * u(other, b).1;
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }

        #[test]
        fn swapping_players_swaps_utilities(
            p in 0.0..=1.0_f64, q in 0.0..=1.0_f64, ka in 0.0..=1.0_f64, kb in 0.0..=1.0_f64,
            al in -5.0..5.0_f64, be in -5.0..5.0_f64, ga in -5.0..5.0_f64, de in -5.0..5.0_f64,
        ) {
            let m = PayoffMatrix::new(al, be, ga, de).unwrap();
            let (a1, b1) = utility_pair(&m, prof(p, q), k(ka), k(kb));
            let (a2, b2) = utility_pair(&m, prof(q, p), k(kb), k(ka));
            prop_assert!((a1 - b2).abs() < 1e-12 && (b1 - a2).abs() < 1e-12);
        }

        #[test]
        fn coefficient_is_the_slope_in_p(
            q in 0.0..=1.0_f64, ka in 0.0..=1.0_f64, kb in 0.0..=1.0_f64,
        ) {
            let m = pd();
            let slope = utility_pair(&m, prof(1.0, q), k(ka), k(kb)).0 - utility_pair(&m, prof(0.0, q), k(ka), k(kb)).0;
            let c = best_response_coefficient(&m, Probability::new(q).unwrap(), k(ka), k(kb));
            prop_assert!((slope - c).abs() < 1e-12);
        }
    }
}
