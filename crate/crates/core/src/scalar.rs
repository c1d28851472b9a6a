//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type the models are evaluated in: `f32` or `f64`.
///
/// Tolerances are part of the trait because the identities checked here
/// (`1e-12` for algebraic identities, `1e-9` for chained computations) only
/// make sense in double precision; `f32` gets proportionally looser bounds.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Tolerance for exact algebraic identities.
    const IDENTITY_TOL: f64;
    /// Tolerance for results of chained computations.
    const CHAIN_TOL: f64;
    /// Slack used when certifying epsilon-Nash equilibria.
    const NE_SLACK: f64;

    /// Converts an `f64` literal. Every `f64` is representable (possibly rounded) in both impls.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal fits the scalar type")
    }

    #[inline]
    fn identity_tol() -> Self {
        Self::lit(Self::IDENTITY_TOL)
    }

    #[inline]
    fn chain_tol() -> Self {
        Self::lit(Self::CHAIN_TOL)
    }

    #[inline]
    fn ne_slack() -> Self {
        Self::lit(Self::NE_SLACK)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }
}

impl Scalar for f64 {
    const IDENTITY_TOL: f64 = 1e-12;
    const CHAIN_TOL: f64 = 1e-9;
    const NE_SLACK: f64 = 1e-9;
}

impl Scalar for f32 {
    const IDENTITY_TOL: f64 = 1e-5;
    const CHAIN_TOL: f64 = 1e-4;
    const NE_SLACK: f64 = 1e-5;
}

/// `n` evenly spaced points on `[lo, hi]`, endpoints included. `n == 1` yields `[lo]`.
pub fn linspace<T: Scalar>(lo: T, hi: T, n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let last = T::from_usize(n - 1).unwrap();
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        hi
                    } else {
                        lo + (hi - lo) * T::from_usize(i).unwrap() / last
                    }
                })
                .collect()
        }
    }
}
