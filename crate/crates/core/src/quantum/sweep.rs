use rayon::prelude::*;

use super::expectation::closed_form_expectations;
use super::povm::{kraus_set, Validity};
use super::strategy::QuantumStrategy;
use crate::error::{Error, Result};
use crate::io::sweep::{SweepResult, SweepSpec, SweepTarget};
use crate::model::{BistableParam, ScenarioBinding};
use crate::scalar::Scalar;

const AXES: [&str; 6] = ["theta_a", "theta_b", "phi_a", "phi_b", "k", "kprime"];
const COLUMNS: [&str; 14] = [
    "theta_a",
    "theta_b",
    "phi_a",
    "phi_b",
    "k",
    "kprime",
    "pi_a",
    "pi_b",
    "p_cc",
    "p_cd",
    "p_dc",
    "p_dd",
    "pi_a_closed_form",
    "proper_povm",
];

/// Evaluates quantum utilities on every point of the sweep grid.
///
/// Besides the matrix results each row carries Alice's utility from the
/// trigonometric closed forms (`pi_a_closed_form`) and `proper_povm`, 1 when
/// the Kraus set is a genuine POVM and 0 otherwise.
pub fn sweep_quantum<T: Scalar>(spec: &SweepSpec<T>) -> Result<SweepResult<T>> {
    let SweepTarget::QuantumUtility {
        payoffs,
        scenario,
        theta_a,
        theta_b,
        phi_a,
        phi_b,
    } = &spec.target
    else {
        return Err(Error::config("engine", "not a quantum sweep target"));
    };
    spec.check_axes(&AXES)?;
    if spec.axis("kprime").is_some() && !matches!(scenario, ScenarioBinding::Independent { .. }) {
        return Err(Error::config(
            "axes.kprime",
            format!("kprime is fixed by the {} scenario", scenario.mode_name()),
        ));
    }
    let rows = spec
        .grid_points()
        .into_par_iter()
        .map(|point| {
            let get = |name: &str, default: T| spec.coordinate(&point, name).unwrap_or(default);
            let (k, mut kp) = scenario.with_k(get("k", scenario.k())).resolve()?;
            if let Some(v) = spec.coordinate(&point, "kprime") {
                kp = BistableParam::named("kprime", v)?;
            }
            let sa = strategy(get("theta_a", *theta_a), get("phi_a", *phi_a), "theta_a", "phi_a")?;
            let sb = strategy(get("theta_b", *theta_b), get("phi_b", *phi_b), "theta_b", "phi_b")?;
            let ks = kraus_set(k, kp);
            let o = ks.outcome(sa, sb);
            let w = payoffs.alice_weights();
            let closed = closed_form_expectations(sa, sb, k, kp);
            let closed_a = closed.iter().zip(w.iter()).map(|(p, w)| *p * *w).sum();
            let proper = if o.validity == Validity::ProperPovm {
                T::one()
            } else {
                T::zero()
            };
            Ok(vec![
                sa.theta(),
                sb.theta(),
                sa.phi(),
                sb.phi(),
                k.value(),
                kp.value(),
                o.expectation(w),
                o.expectation(payoffs.bob_weights()),
                o.probs[0],
                o.probs[1],
                o.probs[2],
                o.probs[3],
                closed_a,
                proper,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult::new(&COLUMNS, rows))
}

fn strategy<T: Scalar>(
    theta: T,
    phi: T,
    theta_name: &'static str,
    phi_name: &'static str,
) -> Result<QuantumStrategy<T>> {
    QuantumStrategy::new(theta, phi).map_err(|e| match e {
        Error::Domain {
            name: "theta",
            value,
            expected,
        } => Error::Domain {
            name: theta_name,
            value,
            expected,
        },
        Error::Domain {
            name: "phi",
            value,
            expected,
        } => Error::Domain {
            name: phi_name,
            value,
            expected,
        },
        other => other,
    })
}
