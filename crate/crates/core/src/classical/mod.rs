//! Classical bistable games: utilities, best responses, Nash equilibria and
//! the cooperation-motivation functional.

mod equilibrium;
mod motivation;
mod sweep;
mod utility;

pub use equilibrium::{
    candidate_table, certify_profile, find_equilibria, find_equilibria_with, find_mixed_ne, grid_equilibria,
    CandidateCheck, Certification, EquilibriumKind, EquilibriumPoint, NeOptions,
};
pub use motivation::{delta_m, CoopMotivation};
pub use sweep::sweep_classical;
pub use utility::{best_response_coefficient, utility_pair, ClassicalProfile};
