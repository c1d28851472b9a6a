//! Outcome probabilities and utilities of the quantum game.

use serde::Serialize;

use super::povm::{kraus_set, KrausSet, Validity, OUTCOMES};
use super::strategy::{final_state, QuantumStrategy};
use crate::model::{BistableParam, PayoffMatrix};
use crate::scalar::{linspace, Scalar};

/// Expectations of the four Kraus elements for one strategy profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumOutcome<T> {
    /// Outcomes `cc, cd, dc, dd`.
    pub probs: [T; 4],
    pub validity: Validity,
    /// Largest imaginary part dropped from `<psi|P|psi>`.
    pub imag_residue: T,
}

impl<T: Scalar> QuantumOutcome<T> {
    pub fn expectation(&self, weights: [T; 4]) -> T {
        self.probs
            .iter()
            .zip(weights.iter())
            .map(|(p, w)| *p * *w)
            .sum()
    }
}

impl<T: Scalar> KrausSet<T> {
    /// Outcome probabilities of `(sa, sb)` measured with this set.
    pub fn outcome(&self, sa: QuantumStrategy<T>, sb: QuantumStrategy<T>) -> QuantumOutcome<T> {
        let (probs, imag_residue) = self.expectations(&final_state(sa, sb));
        QuantumOutcome {
            probs,
            validity: self.validity(),
            imag_residue,
        }
    }

    /// `(Pi_A, Pi_B)` of `(sa, sb)` measured with this set.
    pub fn utilities(
        &self,
        m: &PayoffMatrix<T>,
        sa: QuantumStrategy<T>,
        sb: QuantumStrategy<T>,
    ) -> (T, T) {
        let o = self.outcome(sa, sb);
        (o.expectation(m.alice_weights()), o.expectation(m.bob_weights()))
    }
}

pub fn outcome_probabilities<T: Scalar>(
    sa: QuantumStrategy<T>,
    sb: QuantumStrategy<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> QuantumOutcome<T> {
    kraus_set(k, kprime).outcome(sa, sb)
}

/// `(Pi_A, Pi_B)`; Bob weighs the outcomes with `(alpha, gamma, beta, delta)`.
pub fn utility_pair_quantum<T: Scalar>(
    m: &PayoffMatrix<T>,
    sa: QuantumStrategy<T>,
    sb: QuantumStrategy<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> (T, T) {
    kraus_set(k, kprime).utilities(m, sa, sb)
}

/// The trigonometric expressions for `<P_cc>, <P_cd>, <P_dc>, <P_dd>`, term for term.
///
/// Only a cross-check: off the `phi = 0` slice the `cd` and `dc` rows are not
/// expected to match [`outcome_probabilities`].
pub fn closed_form_expectations<T: Scalar>(
    sa: QuantumStrategy<T>,
    sb: QuantumStrategy<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> [T; 4] {
    let one = T::one();
    let two = T::two();
    let four = T::lit(4.0);
    let sq = |x: T| x * x;
    let (ta, tb, pa, pb) = (sa.theta(), sb.theta(), sa.phi(), sb.phi());
    let (ca, sa_) = ((ta / two).cos(), (ta / two).sin());
    let (cb, sb_) = ((tb / two).cos(), (tb / two).sin());
    let (ca2, sa2, cb2, sb2) = (sq(ca), sq(sa_), sq(cb), sq(sb_));
    let ss = ta.sin() * tb.sin();
    let (kv, kp) = (k.value(), kprime.value());
    let w = (kv + kp - two * kv * kp) / two;
    let sum = pa + pb;

    let cc = ca2 * cb2 * sq(sum.cos()) + w * (sa2 + ca2 * (one - four * cb2 * sq(sum.cos())));
    let cd = ca2 * sb2 * sq(pa.cos()) + sa2 * cb2 * sq(pb.sin()) - two * ss * pa.sin() * pb.cos()
        + w * (sa2 * (one - four * cb2 * sq(pb.sin()))
            + ca2 * (one - four * sb2 * sq(pa.cos()))
            + two * ss * pb.sin() * pa.cos());
    let dc = ca2 * sb2 * sq(pa.sin()) + sa2 * cb2 * sq(pb.cos()) - two * ss * pa.sin() * pb.cos()
        + w * (ca2 * (one - four * sb2 * sq(pa.sin()))
            + sa2 * (one - four * cb2 * sq(pb.cos()))
            + two * ss * pb.sin() * pa.cos());
    let dd = ca2 * cb2 * sq(sum.sin()) + sa2 * sb2 + T::half() * ss * sum.sin()
        + w * (sa2 * (one - four * sb2) + ca2 * (one - four * cb2 * sq(sum.sin()))
            - ss * sum.sin());
    [cc, cd, dc, dd]
}

/// Where the closed forms and the matrix computation diverge most, for one outcome.
#[derive(Debug, Clone, Serialize)]
pub struct OutcomeDiscrepancy<T> {
    pub outcome: &'static str,
    pub max_abs_diff_phi_zero: T,
    pub max_abs_diff_with_phases: T,
    /// `(theta_a, theta_b, phi_a, phi_b, k, kprime)` of the largest difference with phases.
    pub worst_point: [T; 6],
}

#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyReport<T> {
    pub theta_points: usize,
    pub phi_points: usize,
    pub k_values: Vec<T>,
    pub outcomes: Vec<OutcomeDiscrepancy<T>>,
}

impl<T: Scalar> DiscrepancyReport<T> {
    /// Largest difference on the `phi = 0` slice over all outcomes.
    pub fn phi_zero_max(&self) -> T {
        self.outcomes
            .iter()
            .map(|o| o.max_abs_diff_phi_zero)
            .fold(T::zero(), T::max)
    }
}

/// Compares [`closed_form_expectations`] with the matrix computation over
/// `theta_points^2` angles, `phi_points^2` phases (the `phi = 0` slice is
/// always included) and every `(k, k')` from `k_values`.
pub fn closed_form_discrepancy<T: Scalar>(
    theta_points: usize,
    phi_points: usize,
    k_values: &[T],
) -> DiscrepancyReport<T> {
    let thetas = linspace(T::zero(), T::PI(), theta_points);
    let phis = linspace(T::zero(), T::FRAC_PI_2(), phi_points.max(1));
    let mut slice = [T::zero(); 4];
    let mut phase = [T::zero(); 4];
    let mut worst = [[T::zero(); 6]; 4];
    for &k in k_values {
        for &kp in k_values {
            let (bk, bkp) = (BistableParam::new(k).unwrap(), BistableParam::new(kp).unwrap());
            let ks = kraus_set(bk, bkp);
            for &ta in &thetas {
                for &tb in &thetas {
                    for &pa in &phis {
                        for &pb in &phis {
                            let sa = QuantumStrategy::new(ta, pa).unwrap();
                            let sb = QuantumStrategy::new(tb, pb).unwrap();
                            let matrix = ks.outcome(sa, sb).probs;
                            let closed = closed_form_expectations(sa, sb, bk, bkp);
                            for i in 0..4 {
                                let d = (matrix[i] - closed[i]).abs();
                                if pa == T::zero() && pb == T::zero() && d > slice[i] {
                                    slice[i] = d;
                                }
                                if d > phase[i] {
                                    phase[i] = d;
                                    worst[i] = [ta, tb, pa, pb, k, kp];
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    DiscrepancyReport {
        theta_points,
        phi_points,
        k_values: k_values.to_vec(),
        outcomes: (0..4)
            .map(|i| OutcomeDiscrepancy {
                outcome: OUTCOMES[i],
                max_abs_diff_phi_zero: slice[i],
                max_abs_diff_with_phases: phase[i],
                worst_point: worst[i],
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{utility_pair, ClassicalProfile};
    use crate::quantum::povm::sharp_basis;
    use crate::quantum::strategy::StateVector;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn kp(k: f64) -> BistableParam<f64> {
        BistableParam::new(k).unwrap()
    }
    fn s(t: f64, p: f64) -> QuantumStrategy<f64> {
        QuantumStrategy::new(t, p).unwrap()
    }
    fn pd() -> PayoffMatrix<f64> {
        PayoffMatrix::new(3.0, 0.0, 1.0, 5.0).unwrap()
    }

    #[test]
    fn identity_strategies() {
        let id = QuantumStrategy::identity();
        let o = outcome_probabilities(id, id, kp(1.0), kp(1.0));
        assert_eq!(o.validity, Validity::ProperPovm);
        for (a, b) in o.probs.iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        for (k, k2) in [(0.75, 0.75), (0.6, 0.9), (0.2, 0.3), (0.9, 0.1)] {
            let w = (k + k2 - 2.0 * k * k2) / 2.0;
            let o = outcome_probabilities(id, id, kp(k), kp(k2));
            for (a, b) in o.probs.iter().zip([1.0 - 3.0 * w, w, w, w]) {
                assert!((a - b).abs() < 1e-12);
            }
            assert!(o.imag_residue < 1e-12);
        }
    }

    #[test]
    fn identity_utilities() {
        let id = QuantumStrategy::identity();
        assert!((utility_pair_quantum(&pd(), id, id, kp(1.0), kp(1.0)).0 - 3.0).abs() < 1e-12);
        for k in [0.5, 0.6, 0.8, 0.95] {
            let w = (2.0 * k - 2.0 * k * k) / 2.0;
            let (a, _) = utility_pair_quantum(&pd(), id, id, kp(k), kp(k));
            assert!((a - (3.0 - 3.0 * w)).abs() < 1e-12);
        }
    }

    #[test]
    fn uniform_at_half() {
        let o = outcome_probabilities(s(1.0, 0.3), s(2.5, 1.2), kp(0.5), kp(0.5));
        for p in o.probs {
            assert!((p - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn quasi_probability_still_sums_to_one() {
        let o = outcome_probabilities(s(0.0, 0.0), s(0.0, 0.0), kp(0.95), kp(0.05));
        assert_eq!(o.validity, Validity::QuasiProbability);
        assert!(o.probs.iter().any(|p| *p < 0.0));
        assert!((o.probs.iter().sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn phi_zero_slice_matches_closed_forms() {
        let ks: Vec<f64> = (0..6).map(|i| 0.5 + 0.1 * i as f64).collect();
        let r = closed_form_discrepancy(19, 1, &ks);
        assert!(r.phi_zero_max() < 1e-9, "{r:?}");
    }

    #[test]
    fn phi_zero_slice_is_affine_in_sharp_utilities() {
        // On the real slice Pi = f * Pi_sharp(x_a, x_b) + w * (alpha + beta + gamma + delta).
        let m = pd();
        for &(k, k2) in &[(1.0, 1.0), (0.8, 0.7), (0.55, 0.95)] {
            let f = (2.0 * k - 1.0) * (2.0 * k2 - 1.0);
            let w = (k + k2 - 2.0 * k * k2) / 2.0;
            for &ta in &[0.0, 0.4, 1.7, PI] {
                for &tb in &[0.0, 0.9, 2.2, PI] {
                    let (sa, sb) = (s(ta, 0.0), s(tb, 0.0));
                    let prof = ClassicalProfile::new(sa.cos2_half(), sb.cos2_half()).unwrap();
                    let (ca, cb) = utility_pair(&m, prof, kp(1.0), kp(1.0));
                    let (qa, qb) = utility_pair_quantum(&m, sa, sb, kp(k), kp(k2));
                    assert!((qa - (f * ca + w * 9.0)).abs() < 1e-12);
                    assert!((qb - (f * cb + w * 9.0)).abs() < 1e-12);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn probabilities_sum_to_one(
            ta in 0.0..=PI, tb in 0.0..=PI, pa in 0.0..=FRAC_PI_2, pb in 0.0..=FRAC_PI_2,
            k in 0.0..=1.0f64, k2 in 0.0..=1.0f64,
        ) {
            let o = outcome_probabilities(s(ta, pa), s(tb, pb), kp(k), kp(k2));
            prop_assert!((o.probs.iter().sum::<f64>() - 1.0).abs() < 1e-9);
            prop_assert!(o.imag_residue < 1e-12);
        }

        #[test]
        fn swap_symmetry(
            ta in 0.0..=PI, tb in 0.0..=PI, pa in 0.0..=FRAC_PI_2, pb in 0.0..=FRAC_PI_2,
            k in 0.5..=1.0f64, k2 in 0.5..=1.0f64,
        ) {
            let m = PayoffMatrix::new(2.0, -1.0, 4.0, 0.5).unwrap();
            let (a, b) = utility_pair_quantum(&m, s(ta, pa), s(tb, pb), kp(k), kp(k2));
            let (a2, b2) = utility_pair_quantum(&m, s(tb, pb), s(ta, pa), kp(k2), kp(k));
            prop_assert!((a - b2).abs() < 1e-12 && (b - a2).abs() < 1e-12);
        }

        #[test]
        fn sharp_cc_is_overlap_with_bell_vector(
            ta in 0.0..=PI, tb in 0.0..=PI, pa in 0.0..=FRAC_PI_2, pb in 0.0..=FRAC_PI_2,
        ) {
            let (sa, sb) = (s(ta, pa), s(tb, pb));
            let f = final_state(sa, sb);
            let o = outcome_probabilities(sa, sb, kp(1.0), kp(1.0));
            for (i, v) in sharp_basis::<f64>().into_iter().enumerate() {
                let overlap = StateVector { amplitudes: v }.inner(&f).norm_sqr();
                prop_assert!((o.probs[i] - overlap).abs() < 1e-12);
            }
            let closed = closed_form_expectations(sa, sb, kp(1.0), kp(1.0));
            let c = (ta / 2.0).cos().powi(2) * (tb / 2.0).cos().powi(2) * (pa + pb).cos().powi(2);
            prop_assert!((closed[0] - c).abs() < 1e-12);
            prop_assert!((closed[0] - o.probs[0]).abs() < 1e-12);
        }
    }
}
