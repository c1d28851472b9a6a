use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Probability<T>(T);

impl<T: Scalar> Probability<T> {
    pub fn new(value: T) -> Result<Self> {
        Self::named("p", value)
    }

    /// Like [`Probability::new`] but reports `name` in the domain error.
    pub fn named(name: &'static str, value: T) -> Result<Self> {
        if value >= T::zero() && value <= T::one() {
            Ok(Probability(value))
        } else {
            Err(Error::domain(name, value.as_f64(), "0 <= value <= 1"))
        }
    }

    /// Clamps into `[0, 1]`; NaN maps to 0.
    pub fn saturating(value: T) -> Self {
        if value.is_nan() {
            Probability(T::zero())
        } else {
            Probability(value.max(T::zero()).min(T::one()))
        }
    }

    pub fn zero() -> Self {
        Probability(T::zero())
    }

    pub fn one() -> Self {
        Probability(T::one())
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }
}

/// Degree of (ir)rationality `k` of one agent.
///
/// `k = 1` keeps the rational choice, `k = 0.5` makes the final choice a coin
/// flip and `k = 0` always contradicts the rational choice.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BistableParam<T>(T);

impl<T: Scalar> BistableParam<T> {
    pub fn new(k: T) -> Result<Self> {
        Self::named("k", k)
    }

    pub fn named(name: &'static str, k: T) -> Result<Self> {
        if k >= T::zero() && k <= T::one() {
            Ok(BistableParam(k))
        } else {
            Err(Error::domain(name, k.as_f64(), "0 <= k <= 1"))
        }
    }

    pub fn rational() -> Self {
        BistableParam(T::one())
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }

    /// `2k - 1`, the slope of the transform in `p`.
    #[inline]
    pub fn slope(self) -> T {
        T::two() * self.0 - T::one()
    }

    /// Holds on the range where the unsharp projector is read as a noisy measurement.
    pub fn quantum_valid(self) -> bool {
        self.0 >= T::half() && self.0 <= T::one()
    }

    /// `1 - k`, the parameter of the complementary agent.
    pub fn complement(self) -> Self {
        BistableParam(T::one() - self.0)
    }
}

/// `p_k = 1 - p - k + 2kp`: the probability that an agent whose rational
/// intent is `p` ends up choosing the option.
#[inline]
pub fn bistable_transform<T: Scalar>(p: Probability<T>, k: BistableParam<T>) -> Probability<T> {
    // Grouped as (1 - k) + (2k - 1) p so that k in {0, 0.5, 1} is exact.
    let (p, k) = (p.value(), k.value());
    Probability::saturating((T::one() - k) + (T::two() * k - T::one()) * p)
}

/// `p + k - 2kp`, the probability of the other option.
#[inline]
pub fn complement_transform<T: Scalar>(p: Probability<T>, k: BistableParam<T>) -> Probability<T> {
    let (p, k) = (p.value(), k.value());
    Probability::saturating(k + (T::one() - T::two() * k) * p)
}

/// Rational intent that produces the transformed probability `t`:
/// `p = (t - 1 + k) / (2k - 1)`. The result is not range checked.
pub fn invert_transform<T: Scalar>(t: T, k: BistableParam<T>) -> Result<T> {
    let slope = k.slope();
    if slope == T::zero() {
        return Err(Error::Degenerate(
            "k = 0.5 maps every intent to 0.5; the transform has no inverse".into(),
        ));
    }
    Ok((t - T::one() + k.value()) / slope)
}
