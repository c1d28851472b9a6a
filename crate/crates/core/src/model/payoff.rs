use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Payoffs of a symmetric 2x2 game.
///
/// Alice receives `(alpha, beta, gamma, delta)` for the outcomes
/// `(Y,Y), (Y,X), (X,Y), (X,X)` (her choice first); Bob receives
/// `(alpha, gamma, beta, delta)` for the same outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PayoffMatrix<T> {
    pub alpha: T,
    pub beta: T,
    pub gamma: T,
    pub delta: T,
}

impl<T: Scalar> PayoffMatrix<T> {
    pub fn new(alpha: T, beta: T, gamma: T, delta: T) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)] {
            if !v.is_finite() {
                return Err(Error::domain(name, v.as_f64(), "finite payoff"));
            }
        }
        Ok(PayoffMatrix {
            alpha,
            beta,
            gamma,
            delta,
        })
    }

    /// Alice's payoff per outcome, ordered `(Y,Y), (Y,X), (X,Y), (X,X)`.
    pub fn alice_weights(&self) -> [T; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    /// Bob's payoff per outcome in the same order.
    pub fn bob_weights(&self) -> [T; 4] {
        [self.alpha, self.gamma, self.beta, self.delta]
    }

    /// `alpha - beta + delta - gamma`, the interaction term of both best-response brackets.
    pub fn interaction(&self) -> T {
        self.alpha - self.beta + self.delta - self.gamma
    }

    /// `(delta - beta) / Gamma`, the opponent probability (after the bistable
    /// transform) at which a player is indifferent. `None` when `Gamma == 0`.
    pub fn indifference_point(&self) -> Option<T> {
        let g = self.interaction();
        if g == T::zero() {
            None
        } else {
            Some((self.delta - self.beta) / g)
        }
    }

    /// Average payoff, what either player gets when all four outcomes are equally likely.
    pub fn mean(&self) -> T {
        (self.alpha + self.beta + self.gamma + self.delta) / T::lit(4.0)
    }

    /// Largest absolute payoff, at least one. Used to scale tolerances.
    pub fn scale(&self) -> T {
        self.alice_weights()
            .into_iter()
            .fold(T::one(), |acc, v| acc.max(v.abs()))
    }

    /// Payoffs derived from a donation game with benefit `b` and cost `c`:
    /// `(b - c, -c, 0, b)`.
    pub fn from_benefit_cost(b: T, c: T) -> Self {
        PayoffMatrix {
            alpha: b - c,
            beta: -c,
            gamma: T::zero(),
            delta: b,
        }
    }
}

/// Named game families with payoff-ordering constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GamePreset {
    PrisonersDilemma,
    StagHunt,
    Chicken,
    Custom,
}

/// Display names of the two options. `Y` is option index 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionLabels {
    pub y: String,
    pub x: String,
}

impl GamePreset {
    pub const ALL: [GamePreset; 3] = [
        GamePreset::PrisonersDilemma,
        GamePreset::StagHunt,
        GamePreset::Chicken,
    ];

    /// Demo payoffs satisfying the preset's ordering. `None` for `Custom`.
    pub fn default_payoffs<T: Scalar>(self) -> Option<PayoffMatrix<T>> {
        let m = |a: f64, b: f64, c: f64, d: f64| PayoffMatrix {
            alpha: T::lit(a),
            beta: T::lit(b),
            gamma: T::lit(c),
            delta: T::lit(d),
        };
        match self {
            GamePreset::PrisonersDilemma => Some(m(3.0, 0.0, 1.0, 5.0)),
            GamePreset::StagHunt => Some(m(4.0, 0.0, 3.0, 2.0)),
            GamePreset::Chicken => Some(m(3.0, 1.0, 4.0, -10.0)),
            GamePreset::Custom => None,
        }
    }

    pub fn labels(self) -> OptionLabels {
        let (y, x) = match self {
            GamePreset::PrisonersDilemma => ("cooperate", "defect"),
            GamePreset::StagHunt => ("stag", "rabbit"),
            GamePreset::Chicken => ("swerve", "straight"),
            GamePreset::Custom => ("Y", "X"),
        };
        OptionLabels {
            y: y.into(),
            x: x.into(),
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            GamePreset::PrisonersDilemma => "pd",
            GamePreset::StagHunt => "sh",
            GamePreset::Chicken => "cg",
            GamePreset::Custom => "custom",
        }
    }
}

/// One payoff inequality and whether it holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Constraint {
    pub expression: &'static str,
    pub satisfied: bool,
}

/// Outcome of [`validate_preset`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PresetReport {
    pub preset: GamePreset,
    pub constraints: Vec<Constraint>,
    pub warnings: Vec<String>,
}

impl PresetReport {
    pub fn is_valid(&self) -> bool {
        self.constraints.iter().all(|c| c.satisfied)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints.iter().filter(|c| !c.satisfied)
    }
}

/// Checks the payoff ordering that defines a game family.
///
/// Comparisons are strict except where the family is defined with `>=`
/// (`gamma >= delta` in the stag hunt).
pub fn validate_preset<T: Scalar>(m: &PayoffMatrix<T>, preset: GamePreset) -> PresetReport {
    let (a, b, g, d) = (m.alpha, m.beta, m.gamma, m.delta);
    let c = |expression, satisfied| Constraint {
        expression,
        satisfied,
    };
    let mut warnings = Vec::new();
    let constraints = match preset {
        GamePreset::PrisonersDilemma => vec![
            c("delta > alpha", d > a),
            c("alpha > gamma", a > g),
            c("gamma > beta", g > b),
            c("2 alpha > beta + gamma", T::two() * a > b + g),
        ],
        GamePreset::StagHunt => vec![
            c("alpha > gamma", a > g),
            c("gamma >= delta", g >= d),
            c("delta > beta", d > b),
            c("gamma + delta > alpha + beta", g + d > a + b),
        ],
        GamePreset::Chicken => {
            // "beta >> delta" has no quantitative gap; flag narrow margins only.
            if b > d && b - d < g - b {
                warnings.push(format!(
                    "beta - delta = {} is smaller than gamma - beta = {}; beta >> delta is weakly satisfied",
                    b - d,
                    g - b
                ));
            }
            vec![
                c("gamma > alpha", g > a),
                c("alpha > beta", a > b),
                c("beta > delta", b > d),
                c("beta > 0", b > T::zero()),
                c("beta < gamma + beta", b < g + b),
            ]
        }
        GamePreset::Custom => Vec::new(),
    };
    PresetReport {
        preset,
        constraints,
        warnings,
    }
}
