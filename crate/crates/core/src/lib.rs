//! Bistable-probability models of (ir)rational decision making in classical
//! and quantum two-player games.
//!
//! Every agent carries a parameter `k` in `[0, 1]` that deforms a rational
//! choice probability `p` into `p_k = 1 - p - k + 2kp`. The classical engine
//! evaluates utilities and enumerates Nash equilibria of the deformed game;
//! the quantum engine plays the same game on a maximally entangled pair of
//! qubits measured with unsharp (POVM) projectors. A Monte Carlo layer samples
//! both models, and the `io` module drives sweeps, equilibrium tables and the
//! claims report used by the `bistable` command-line tool.
//!
//! All numerics are generic over [`Scalar`] (`f32` or `f64`); the `*F64`
//! aliases below fix the double-precision instantiation used by the CLI.

pub mod classical;
pub mod error;
pub mod io;
pub mod model;
pub mod montecarlo;
pub mod quantum;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type ProbabilityF64 = model::Probability<f64>;
pub type BistableParamF64 = model::BistableParam<f64>;
pub type PayoffMatrixF64 = model::PayoffMatrix<f64>;
pub type ScenarioBindingF64 = model::ScenarioBinding<f64>;
pub type OutcomeDistributionF64 = model::OutcomeDistribution<f64>;
pub type EquilibriumPointF64 = classical::EquilibriumPoint<f64>;
pub type QuantumStrategyF64 = quantum::QuantumStrategy<f64>;
pub type StateVectorF64 = quantum::StateVector<f64>;
pub type KrausSetF64 = quantum::KrausSet<f64>;
pub type QuantumOutcomeF64 = quantum::QuantumOutcome<f64>;

pub type PayoffMatrixF32 = model::PayoffMatrix<f32>;
pub type BistableParamF32 = model::BistableParam<f32>;
pub type QuantumStrategyF32 = quantum::QuantumStrategy<f32>;
pub type KrausSetF32 = quantum::KrausSet<f32>;
