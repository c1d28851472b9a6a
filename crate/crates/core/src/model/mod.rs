//! Bistable probabilities, payoff structures and joint outcome laws shared by
//! the classical and quantum engines.

mod bistable;
mod outcome;
mod payoff;
mod scenario;

pub use bistable::{bistable_transform, complement_transform, invert_transform, BistableParam, Probability};
pub use outcome::{factorizability_defect, outcome_distribution, OutcomeDistribution};
pub use payoff::{validate_preset, Constraint, GamePreset, OptionLabels, PayoffMatrix, PresetReport};
pub use scenario::ScenarioBinding;
