//! Unsharp single-qubit projectors and the two-qubit Kraus set.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::linalg::{Operator2, Operator4};
use super::strategy::StateVector;
use crate::error::{Error, Result};
use crate::model::BistableParam;
use crate::scalar::Scalar;

/// Which eigenprojector of `n·sigma` the unsharp projector is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(1 - k) I + (2k - 1) pi_±`, with `pi_± = (I ± n·sigma) / 2`.
pub fn bistable_projector<T: Scalar>(
    direction: [T; 3],
    sign: Sign,
    k: BistableParam<T>,
) -> Result<Operator2<T>> {
    let norm = direction.iter().map(|x| *x * *x).sum::<T>().sqrt();
    if !((norm - T::one()).abs() <= T::identity_tol()) {
        return Err(Error::domain("direction", norm.as_f64(), "unit vector"));
    }
    let s = match sign {
        Sign::Plus => T::one(),
        Sign::Minus => -T::one(),
    };
    let [nx, ny, nz] = direction;
    let h = T::half();
    let z = T::zero();
    let pi = Operator2::from_rows([
        [Complex::new(h + s * h * nz, z), Complex::new(s * h * nx, -s * h * ny)],
        [Complex::new(s * h * nx, s * h * ny), Complex::new(h - s * h * nz, z)],
    ]);
    let k = k.value();
    Ok(Operator2::identity().scale(T::one() - k) + pi.scale(T::two() * k - T::one()))
}

/// Whether the Kraus elements form a genuine POVM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Validity {
    ProperPovm,
    QuasiProbability,
}

/// Outcome labels in element order.
pub const OUTCOMES: [&str; 4] = ["cc", "cd", "dc", "dd"];

/// The four two-qubit elements `P_cc, P_cd, P_dc, P_dd` for a pair `(k, k')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KrausSet<T> {
    pub k: BistableParam<T>,
    pub kprime: BistableParam<T>,
    pub a1: T,
    pub a2: T,
    pub a3: T,
    /// Elements in the order of [`OUTCOMES`].
    pub elements: [Operator4<T>; 4],
}

/// Builds the Kraus set for `(k, k')`.
pub fn kraus_set<T: Scalar>(k: BistableParam<T>, kprime: BistableParam<T>) -> KrausSet<T> {
    let (kv, kp) = (k.value(), kprime.value());
    let one = T::one();
    let a1 = kv * kp + (one - kv) * (one - kp);
    let a2 = kp * (one - kv) + kv * (one - kp);
    let a3 = (T::two() * kv - one) * (T::two() * kp - one);
    let h = T::half();
    let z = T::zero();
    let r = |x: T| Complex::new(h * x, z);
    let i = |x: T| Complex::new(z, h * x);
    let o = Complex::new(z, z);

    let cc = Operator4::from_rows([
        [r(a1), o, o, i(-a3)],
        [o, r(a2), o, o],
        [o, o, r(a2), o],
        [i(a3), o, o, r(a1)],
    ]);
    let cd = Operator4::from_rows([
        [r(a2), o, o, o],
        [o, r(a1), i(a3), o],
        [o, i(-a3), r(a1), o],
        [o, o, o, r(a2)],
    ]);
    let dc = Operator4::from_rows([
        [r(a2), o, o, o],
        [o, r(a1), i(-a3), o],
        [o, i(a3), r(a1), o],
        [o, o, o, r(a2)],
    ]);
    let dd = Operator4::from_rows([
        [r(a1), o, o, i(a3)],
        [o, r(a2), o, o],
        [o, o, r(a2), o],
        [i(-a3), o, o, r(a1)],
    ]);
    KrausSet {
        k,
        kprime,
        a1,
        a2,
        a3,
        elements: [cc, cd, dc, dd],
    }
}

impl<T: Scalar> KrausSet<T> {
    /// Largest entry of `sum(P) - I`.
    pub fn completeness_defect(&self) -> T {
        let sum = self
            .elements
            .iter()
            .fold(Operator4::zero(), |acc, p| acc + *p);
        sum.max_abs_diff(&Operator4::identity())
    }

    pub fn hermiticity_defect(&self) -> T {
        self.elements
            .iter()
            .map(|p| p.hermiticity_defect())
            .fold(T::zero(), T::max)
    }

    /// Smallest eigenvalue over all four elements, computed numerically.
    pub fn min_eigenvalue(&self) -> T {
        self.elements
            .iter()
            .flat_map(|p| p.hermitian_eigenvalues())
            .fold(T::infinity(), T::min)
    }

    /// Smallest eigenvalue from the spectrum `(1 + 3 a3) / 4`, `(1 - a3) / 4` (three times)
    /// shared by every element.
    pub fn min_eigenvalue_closed_form(&self) -> T {
        let q = T::lit(0.25);
        (q * (T::one() + T::lit(3.0) * self.a3)).min(q * (T::one() - self.a3))
    }

    /// `ProperPovm` iff every element is positive semidefinite.
    pub fn validity(&self) -> Validity {
        if self.min_eigenvalue_closed_form() >= -T::identity_tol() {
            Validity::ProperPovm
        } else {
            Validity::QuasiProbability
        }
    }

    /// Real parts of `<psi|P|psi>` in element order, with the largest imaginary residue.
    pub fn expectations(&self, psi: &StateVector<T>) -> ([T; 4], T) {
        let mut probs = [T::zero(); 4];
        let mut residue = T::zero();
        for (p, e) in probs.iter_mut().zip(self.elements.iter()) {
            let z = e.expectation(&psi.amplitudes);
            *p = z.re;
            residue = residue.max(z.im.abs());
        }
        (probs, residue)
    }

    /// Diagnostic for sampling refusals: the element with the most negative eigenvalue.
    pub(crate) fn positivity_error(&self, probs: &[T; 4]) -> Error {
        let (idx, worst) = probs
            .iter()
            .enumerate()
            .fold((0, T::infinity()), |(bi, bv), (i, v)| {
                if *v < bv {
                    (i, *v)
                } else {
                    (bi, bv)
                }
            });
        Error::QuasiProbability {
            k: self.k.value().as_f64(),
            kprime: self.kprime.value().as_f64(),
            product: self.a3.as_f64(),
            outcome: OUTCOMES[idx],
            probability: worst.as_f64(),
        }
    }
}

/// Bell-basis vectors `psi_cc, psi_cd, psi_dc, psi_dd`.
pub fn sharp_basis<T: Scalar>() -> [[Complex<T>; 4]; 4] {
    let r = T::FRAC_1_SQRT_2();
    let z = T::zero();
    let o = Complex::new(z, z);
    let re = Complex::new(r, z);
    let im = Complex::new(z, r);
    [
        [re, o, o, im],
        [o, re, -im, o],
        [o, -im, re, o],
        [im, o, o, re],
    ]
}

/// Rank-one projectors onto [`sharp_basis`].
pub fn sharp_projectors<T: Scalar>() -> [Operator4<T>; 4] {
    sharp_basis::<T>().map(|v| Operator4::outer(&v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{bistable_transform, Probability};
    use crate::scalar::linspace;

    fn kp(k: f64) -> BistableParam<f64> {
        BistableParam::new(k).unwrap()
    }

    #[test]
    fn z_projectors() {
        let z = [0.0, 0.0, 1.0];
        let p = bistable_projector(z, Sign::Plus, kp(1.0)).unwrap();
        assert_eq!(p.entries[0][0].re, 1.0);
        assert_eq!(p.entries[1][1].re, 0.0);
        for k in [0.0, 0.3, 0.5, 0.8] {
            let plus = bistable_projector(z, Sign::Plus, kp(k)).unwrap();
            let minus = bistable_projector(z, Sign::Minus, kp(k)).unwrap();
            assert!((plus.entries[0][0].re - k).abs() < 1e-15);
            assert!((plus.entries[1][1].re - (1.0 - k)).abs() < 1e-15);
            assert!((minus.entries[0][0].re - (1.0 - k)).abs() < 1e-15);
            assert_eq!(plus.entries[0][1].norm(), 0.0);
            assert!((plus + minus).max_abs_diff(&Operator2::identity()) < 1e-15);
        }
    }

    #[test]
    fn projector_expectation_is_bistable_transform() {
        for p in linspace(0.0_f64, 1.0, 11) {
            for k in linspace(0.0_f64, 1.0, 11) {
                let psi = [Complex::new(p.sqrt(), 0.0), Complex::new((1.0 - p).sqrt(), 0.0)];
                let proj = bistable_projector([0.0, 0.0, 1.0], Sign::Plus, kp(k)).unwrap();
                let e = proj.expectation(&psi).re;
                let t = bistable_transform(Probability::new(p).unwrap(), kp(k)).value();
                assert!((e - t).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn tilted_projector_is_hermitian_with_unit_trace() {
        let (t, f) = (0.7_f64, 1.1_f64);
        let n = [t.sin() * f.cos(), t.sin() * f.sin(), t.cos()];
        let p = bistable_projector(n, Sign::Plus, kp(0.8)).unwrap();
        assert!(p.hermiticity_defect() < 1e-15);
        assert!((p.trace().re - 1.0).abs() < 1e-15);
        let e = p.hermitian_eigenvalues();
        assert!((e[0] - 0.2).abs() < 1e-12 && (e[1] - 0.8).abs() < 1e-12);
    }

    #[test]
    fn non_unit_direction_rejected() {
        assert!(matches!(
            bistable_projector([0.0, 0.0, 2.0], Sign::Plus, kp(0.7)),
            Err(Error::Domain { name: "direction", .. })
        ));
    }

    #[test]
    fn sharp_limit() {
        let ks = kraus_set(kp(1.0), kp(1.0));
        for (p, pi) in ks.elements.iter().zip(sharp_projectors::<f64>()) {
            assert!(p.max_abs_diff(&pi) < 1e-12);
            assert!((*p * *p).max_abs_diff(p) < 1e-12);
            assert!((p.trace().re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn structural_invariants_on_grid() {
        for k in linspace(0.0, 1.0, 21) {
            for k2 in linspace(0.0, 1.0, 21) {
                let ks = kraus_set(kp(k), kp(k2));
                assert!((ks.a1 + ks.a2 - 1.0).abs() < 1e-12);
                assert!(ks.completeness_defect() < 1e-12);
                assert!(ks.hermiticity_defect() < 1e-12);
                assert!((ks.min_eigenvalue() - ks.min_eigenvalue_closed_form()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn positivity_flag() {
        assert_eq!(kraus_set(kp(0.9), kp(0.1)).validity(), Validity::QuasiProbability);
        assert_eq!(kraus_set(kp(0.6), kp(0.9)).validity(), Validity::ProperPovm);
        // uv = -1/3 sits exactly on the boundary.
        let u = (1.0_f64 / 3.0).sqrt();
        let ks = kraus_set(kp((1.0 + u) / 2.0), kp((1.0 - u) / 2.0));
        assert!(ks.min_eigenvalue().abs() < 1e-12);
        assert_eq!(ks.validity(), Validity::ProperPovm);
    }
}
