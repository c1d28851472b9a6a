//! Single-qubit strategies and the two-qubit final state.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::linalg::{kron, Operator2};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Strategy angles of one player: `theta` in `[0, pi]`, `phi` in `[0, pi/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumStrategy<T> {
    theta: T,
    phi: T,
}

impl<T: Scalar> QuantumStrategy<T> {
    pub fn new(theta: T, phi: T) -> Result<Self> {
        if !(theta >= T::zero() && theta <= T::PI()) {
            return Err(Error::domain("theta", theta.as_f64(), "0 <= theta <= pi"));
        }
        if !(phi >= T::zero() && phi <= T::FRAC_PI_2()) {
            return Err(Error::domain("phi", phi.as_f64(), "0 <= phi <= pi/2"));
        }
        Ok(QuantumStrategy { theta, phi })
    }

    /// Strategy on the `phi = 0` slice.
    pub fn real(theta: T) -> Result<Self> {
        Self::new(theta, T::zero())
    }

    pub fn identity() -> Self {
        QuantumStrategy {
            theta: T::zero(),
            phi: T::zero(),
        }
    }

    pub fn theta(self) -> T {
        self.theta
    }

    pub fn phi(self) -> T {
        self.phi
    }

    /// `cos^2(theta/2)`, the weight this strategy leaves on `|0>`.
    pub fn cos2_half(self) -> T {
        let c = (self.theta / T::two()).cos();
        c * c
    }
}

/// Two-qubit state in the basis `|00>, |01>, |10>, |11>`, Alice on the left.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector<T> {
    pub amplitudes: [Complex<T>; 4],
}

impl<T: Scalar> StateVector<T> {
    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * b
            })
    }
}

/// `[[e^{i phi} cos(theta/2), sin(theta/2)], [-sin(theta/2), e^{-i phi} cos(theta/2)]]`.
pub fn strategy_unitary<T: Scalar>(s: QuantumStrategy<T>) -> Operator2<T> {
    let half = s.theta / T::two();
    let (c, sn) = (half.cos(), half.sin());
    let z = T::zero();
    Operator2::from_rows([
        [Complex::from_polar(c, s.phi), Complex::new(sn, z)],
        [Complex::new(-sn, z), Complex::from_polar(c, -s.phi)],
    ])
}

/// `(|00> + i|11>) / sqrt(2)`.
pub fn bell_state<T: Scalar>() -> StateVector<T> {
    let r = T::FRAC_1_SQRT_2();
    let z = T::zero();
    StateVector {
        amplitudes: [
            Complex::new(r, z),
            Complex::new(z, z),
            Complex::new(z, z),
            Complex::new(z, r),
        ],
    }
}

/// `(U_A ⊗ U_B)` applied to the Bell state.
pub fn final_state<T: Scalar>(sa: QuantumStrategy<T>, sb: QuantumStrategy<T>) -> StateVector<T> {
    let u = kron(&strategy_unitary(sa), &strategy_unitary(sb));
    StateVector {
        amplitudes: u.apply(&bell_state::<T>().amplitudes),
    }
}

/// Same state as [`final_state`] from precomputed single-qubit unitaries,
/// skipping the zero entries of the Bell state.
pub(crate) fn entangled_state<T: Scalar>(ua: &Operator2<T>, ub: &Operator2<T>) -> StateVector<T> {
    let r = T::FRAC_1_SQRT_2();
    let i = Complex::new(T::zero(), T::one());
    let mut amplitudes = [Complex::new(T::zero(), T::zero()); 4];
    for a in 0..2 {
        for b in 0..2 {
            let v = ua.entries[a][0] * ub.entries[b][0] + i * ua.entries[a][1] * ub.entries[b][1];
            amplitudes[2 * a + b] = v * r;
        }
    }
    StateVector { amplitudes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn s(theta: f64, phi: f64) -> QuantumStrategy<f64> {
        QuantumStrategy::new(theta, phi).unwrap()
    }

    // Amplitudes written out term by term, times sqrt(2).
    fn expanded_amplitudes(a: QuantumStrategy<f64>, b: QuantumStrategy<f64>) -> [Complex<f64>; 4] {
        let (ca, sa) = ((a.theta / 2.0).cos(), (a.theta / 2.0).sin());
        let (cb, sb) = ((b.theta / 2.0).cos(), (b.theta / 2.0).sin());
        let e = |x: f64| Complex::from_polar(1.0, x);
        let i = Complex::new(0.0, 1.0);
        [
            e(a.phi + b.phi) * ca * cb + i * sa * sb,
            -e(a.phi) * ca * sb + i * e(-b.phi) * sa * cb,
            -e(b.phi) * sa * cb + i * e(-a.phi) * ca * sb,
            Complex::new(sa * sb, 0.0) + i * e(-(a.phi + b.phi)) * ca * cb,
        ]
    }

    #[test]
    fn angle_domain() {
        assert!(QuantumStrategy::new(PI, FRAC_PI_2).is_ok());
        assert!(matches!(
            QuantumStrategy::new(-0.1, 0.0),
            Err(Error::Domain { name: "theta", .. })
        ));
        assert!(matches!(
            QuantumStrategy::new(1.0, 1.6),
            Err(Error::Domain { name: "phi", .. })
        ));
        assert!(QuantumStrategy::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn unitary_anchors() {
        assert!(strategy_unitary(s(0.0, 0.0)).max_abs_diff(&Operator2::identity()) < 1e-15);
        let flip = strategy_unitary(s(PI, 0.0));
        let want = Operator2::from_rows([
            [Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)],
            [Complex::new(-1.0, 0.0), Complex::new(0.0, 0.0)],
        ]);
        assert!(flip.max_abs_diff(&want) < 1e-15);

        let u = strategy_unitary(s(FRAC_PI_2, FRAC_PI_4));
        assert!(u.unitarity_defect() < 1e-12);
        let c = FRAC_PI_4.cos();
        let z = u.entries;
        assert!((z[0][0] - Complex::new(c * c, c * c)).norm() < 1e-15);
        assert!((z[0][1] - Complex::new(c, 0.0)).norm() < 1e-15);
        assert!((z[1][0] - Complex::new(-c, 0.0)).norm() < 1e-15);
        assert!((z[1][1] - Complex::new(c * c, -c * c)).norm() < 1e-15);
    }

    #[test]
    fn identity_strategies_keep_bell_state() {
        let f = final_state(s(0.0, 0.0), s(0.0, 0.0));
        assert_eq!(f, bell_state());
    }

    #[test]
    fn double_flip() {
        let f = final_state(s(PI, 0.0), s(PI, 0.0));
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let want = [
            Complex::new(0.0, r),
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            Complex::new(r, 0.0),
        ];
        for (a, b) in f.amplitudes.iter().zip(want) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn matches_expanded_amplitudes(
            ta in 0.0..=PI, tb in 0.0..=PI, pa in 0.0..=FRAC_PI_2, pb in 0.0..=FRAC_PI_2,
        ) {
            let (a, b) = (s(ta, pa), s(tb, pb));
            let f = final_state(a, b);
            let r = std::f64::consts::FRAC_1_SQRT_2;
            for (x, y) in f.amplitudes.iter().zip(expanded_amplitudes(a, b)) {
                prop_assert!((x - y * r).norm() < 1e-12);
            }
            prop_assert!((f.norm_sqr() - 1.0).abs() < 1e-12);
            let fast = entangled_state(&strategy_unitary(a), &strategy_unitary(b));
            for (x, y) in f.amplitudes.iter().zip(fast.amplitudes) {
                prop_assert!((x - y).norm() < 1e-15);
            }
            prop_assert!(strategy_unitary(a).unitarity_defect() < 1e-12);
        }
    }
}
