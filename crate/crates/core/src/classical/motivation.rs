use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{bistable_transform, BistableParam, Probability};
use crate::scalar::Scalar;

/// Donation-game parameters: benefit `b`, cost `c`, and the resulting motivation to cooperate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoopMotivation<T> {
    pub b: T,
    pub c: T,
    pub delta_m: T,
}

impl<T: Scalar> CoopMotivation<T> {
    pub fn evaluate(
        b: T,
        c: T,
        p: Probability<T>,
        q: Probability<T>,
        k: BistableParam<T>,
        kprime: BistableParam<T>,
    ) -> Result<Self> {
        Ok(CoopMotivation {
            b,
            c,
            delta_m: delta_m(b, c, p, q, k, kprime)?,
        })
    }
}

/// Motivation to cooperate under payoffs `(b - c, -c, 0, b)`:
///
/// `[s t (b - c) - c s (1 - t)] - b (1 - s)(1 - t)` with `s = p_k`, `t = q_k'`.
pub fn delta_m<T: Scalar>(
    b: T,
    c: T,
    p: Probability<T>,
    q: Probability<T>,
    k: BistableParam<T>,
    kprime: BistableParam<T>,
) -> Result<T> {
    if !(c > T::zero()) {
        return Err(Error::domain("c", c.as_f64(), "c > 0"));
    }
    if !(b > c) {
        return Err(Error::domain("b", b.as_f64(), "b > c"));
    }
    let s = bistable_transform(p, k).value();
    let t = bistable_transform(q, kprime).value();
    let one = T::one();
    Ok(s * t * (b - c) - c * s * (one - t) - b * (one - s) * (one - t))
}
