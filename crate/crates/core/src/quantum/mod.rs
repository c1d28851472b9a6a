//! Two-qubit bistable game: entangled initial state, single-qubit strategy
//! unitaries and an unsharp Bell-basis measurement.

mod expectation;
pub mod linalg;
mod nash;
mod povm;
mod strategy;
mod sweep;

pub use expectation::{
    closed_form_discrepancy, closed_form_expectations, outcome_probabilities,
    utility_pair_quantum, DiscrepancyReport, OutcomeDiscrepancy, QuantumOutcome,
};
pub use nash::{
    certify_quantum_profile, f_factor, ne_condition_closed_form, ne_grid_search,
    CandidateSource, NeConditionReport, QuantumEquilibrium, QuantumGrid, QuantumNeReport,
    QuantumProfile,
};
pub use povm::{
    bistable_projector, kraus_set, sharp_basis, sharp_projectors, KrausSet, Sign, Validity,
    OUTCOMES,
};
pub use strategy::{bell_state, final_state, strategy_unitary, QuantumStrategy, StateVector};
pub use sweep::sweep_quantum;

/// Complex amplitude type.
pub type ComplexScalar<T> = num_complex::Complex<T>;
