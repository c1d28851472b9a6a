use serde::{Deserialize, Serialize};

use super::BistableParam;
use crate::error::Result;
use crate::scalar::Scalar;

/// How the two agents' bistable parameters relate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case", deny_unknown_fields)]
pub enum ScenarioBinding<T> {
    /// Arbitrary `(k, k')`.
    Independent { k: T, kprime: T },
    /// `k' = k`.
    Symmetric { k: T },
    /// Bob is rational: `k' = 1`.
    OneRational { k: T },
    /// `k' = 1 - k`.
    Complementary { k: T },
}

impl<T: Scalar> ScenarioBinding<T> {
    /// Alice's parameter.
    pub fn k(&self) -> T {
        match *self {
            ScenarioBinding::Independent { k, .. }
            | ScenarioBinding::Symmetric { k }
            | ScenarioBinding::OneRational { k }
            | ScenarioBinding::Complementary { k } => k,
        }
    }

    /// The same relation with Alice's parameter replaced by `k`.
    /// For `Independent`, Bob's parameter is kept.
    pub fn with_k(self, k: T) -> Self {
        match self {
            ScenarioBinding::Independent { kprime, .. } => ScenarioBinding::Independent { k, kprime },
            ScenarioBinding::Symmetric { .. } => ScenarioBinding::Symmetric { k },
            ScenarioBinding::OneRational { .. } => ScenarioBinding::OneRational { k },
            ScenarioBinding::Complementary { .. } => ScenarioBinding::Complementary { k },
        }
    }

    /// Resolves to `(k, k')`, validating both against `[0, 1]`.
    pub fn resolve(&self) -> Result<(BistableParam<T>, BistableParam<T>)> {
        let (k, kprime) = match *self {
            ScenarioBinding::Independent { k, kprime } => (k, kprime),
            ScenarioBinding::Symmetric { k } => (k, k),
            ScenarioBinding::OneRational { k } => (k, T::one()),
            ScenarioBinding::Complementary { k } => (k, T::one() - k),
        };
        Ok((
            BistableParam::named("k", k)?,
            BistableParam::named("kprime", kprime)?,
        ))
    }

    pub fn mode_name(&self) -> &'static str {
        match self {
            ScenarioBinding::Independent { .. } => "independent",
            ScenarioBinding::Symmetric { .. } => "symmetric",
            ScenarioBinding::OneRational { .. } => "one_rational",
            ScenarioBinding::Complementary { .. } => "complementary",
        }
    }
}
