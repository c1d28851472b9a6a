use rayon::prelude::*;

use super::{delta_m, utility_pair, ClassicalProfile};
use crate::error::{Error, Result};
use crate::io::sweep::{SweepResult, SweepSpec, SweepTarget};
use crate::model::{outcome_distribution, BistableParam, Probability, ScenarioBinding};
use crate::scalar::Scalar;

const UTILITY_AXES: [&str; 4] = ["p", "q", "k", "kprime"];
const UTILITY_COLUMNS: [&str; 10] = ["p", "q", "k", "kprime", "pi_a", "pi_b", "eps1", "eps2", "eps3", "eps4"];
const DELTA_M_AXES: [&str; 2] = ["k", "b_over_c"];
const DELTA_M_COLUMNS: [&str; 3] = ["k", "b_over_c", "delta_m"];

/// Evaluates utilities or the cooperation motivation on every point of the
/// sweep grid. Rows come out in axis-major order (first axis slowest)
/// regardless of how many worker threads are used.
pub fn sweep_classical<T: Scalar>(spec: &SweepSpec<T>) -> Result<SweepResult<T>> {
    match &spec.target {
        SweepTarget::ClassicalUtility {
            payoffs,
            scenario,
            p,
            q,
        } => {
            spec.check_axes(&UTILITY_AXES)?;
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
                    let kv = get("k", scenario.k());
                    let (k, mut kp) = scenario.with_k(kv).resolve()?;
                    if let Some(v) = spec.coordinate(&point, "kprime") {
                        kp = BistableParam::named("kprime", v)?;
                    }
                    let profile = ClassicalProfile::new(get("p", *p), get("q", *q))?;
                    let (a, b) = utility_pair(payoffs, profile, k, kp);
                    let d = outcome_distribution(profile.p, profile.q, k, kp).as_array();
                    Ok(vec![
                        profile.p.value(),
                        profile.q.value(),
                        k.value(),
                        kp.value(),
                        a,
                        b,
                        d[0],
                        d[1],
                        d[2],
                        d[3],
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SweepResult::new(&UTILITY_COLUMNS, rows))
        }
        SweepTarget::DeltaM {
            c,
            p,
            q,
            scenario,
            b_over_c,
        } => {
            spec.check_axes(&DELTA_M_AXES)?;
            let p = Probability::named("delta_m.p", *p)?;
            let q = Probability::named("delta_m.q", *q)?;
            let rows = spec
                .grid_points()
                .into_par_iter()
                .map(|point| {
                    let kv = spec.coordinate(&point, "k").unwrap_or(scenario.k());
                    let ratio = spec.coordinate(&point, "b_over_c").unwrap_or(*b_over_c);
                    let (k, kp) = scenario.with_k(kv).resolve()?;
                    let v = delta_m(ratio * *c, *c, p, q, k, kp).map_err(|e| match e {
                        Error::Domain { name: "b", value, .. } => Error::Domain {
                            name: "b_over_c",
                            value: value / c.as_f64(),
                            expected: "b / c > 1",
                        },
                        other => other,
                    })?;
                    Ok(vec![kv, ratio, v])
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SweepResult::new(&DELTA_M_COLUMNS, rows))
        }
        _ => Err(Error::config("engine", "not a classical sweep target")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::sweep::Axis;
    use crate::model::PayoffMatrix;

    fn pd() -> PayoffMatrix<f64> {
        PayoffMatrix::new(3.0, 0.0, 1.0, 5.0).unwrap()
    }

    #[test]
    fn single_point_matches_utility_pair() {
        let spec = SweepSpec {
            axes: vec![],
            target: SweepTarget::ClassicalUtility {
                payoffs: pd(),
                scenario: ScenarioBinding::Independent { k: 0.8, kprime: 0.9 },
                p: 0.3,
                q: 0.6,
            },
        };
        let r = sweep_classical(&spec).unwrap();
        assert_eq!(r.rows.len(), 1);
        let (a, b) = utility_pair(
            &pd(),
            ClassicalProfile::new(0.3, 0.6).unwrap(),
            BistableParam::new(0.8).unwrap(),
            BistableParam::new(0.9).unwrap(),
        );
        assert_eq!(r.rows[0][4], a);
        assert_eq!(r.rows[0][5], b);
    }

    #[test]
    fn symmetric_figure_sweep_shape_and_order() {
        let spec = SweepSpec {
            axes: vec![
                Axis::values("k", vec![0.5, 0.6, 0.7, 0.8, 0.9, 1.0]).unwrap(),
                Axis::range("p", 0.0, 1.0, 11).unwrap(),
                Axis::range("q", 0.0, 1.0, 11).unwrap(),
            ],
            target: SweepTarget::ClassicalUtility {
                payoffs: pd(),
                scenario: ScenarioBinding::Symmetric { k: 1.0 },
                p: 0.0,
                q: 0.0,
            },
        };
        let r = sweep_classical(&spec).unwrap();
        assert_eq!(r.rows.len(), 6 * 11 * 11);
        assert_eq!(r.columns[..6], ["p", "q", "k", "kprime", "pi_a", "pi_b"]);
        // first axis slowest, last fastest
        assert_eq!(r.rows[1][1], 0.1);
        assert_eq!(r.rows[11][0], 0.1);
        assert_eq!(r.rows[121][2], 0.6);
        for row in &r.rows[..121] {
            assert!((row[4] - 2.25).abs() < 1e-12);
        }
        assert!(r.rows.iter().all(|row| row[2] == row[3]));
    }

    #[test]
    fn kprime_axis_requires_independent_scenario() {
        let spec = SweepSpec {
            axes: vec![Axis::range("kprime", 0.0, 1.0, 3).unwrap()],
            target: SweepTarget::ClassicalUtility {
                payoffs: pd(),
                scenario: ScenarioBinding::Symmetric { k: 1.0 },
                p: 0.0,
                q: 0.0,
            },
        };
        let err = sweep_classical(&spec).unwrap_err();
        assert!(matches!(err, Error::Config { ref field, .. } if field == "axes.kprime"));
    }

    #[test]
    fn unknown_axis_is_a_config_error() {
        let spec = SweepSpec {
            axes: vec![Axis::range("theta_a", 0.0, 1.0, 3).unwrap()],
            target: SweepTarget::ClassicalUtility {
                payoffs: pd(),
                scenario: ScenarioBinding::Symmetric { k: 1.0 },
                p: 0.0,
                q: 0.0,
            },
        };
        assert!(matches!(sweep_classical(&spec), Err(Error::Config { .. })));
    }

    #[test]
    fn delta_m_surface() {
        let spec = SweepSpec {
            axes: vec![
                Axis::range("k", 0.5, 1.0, 6).unwrap(),
                Axis::range("b_over_c", 1.5, 10.0, 18).unwrap(),
            ],
            target: SweepTarget::DeltaM {
                c: 1.0,
                p: 1.0,
                q: 1.0,
                scenario: ScenarioBinding::Symmetric { k: 1.0 },
                b_over_c: 2.0,
            },
        };
        let r = sweep_classical(&spec).unwrap();
        assert_eq!(r.columns, ["k", "b_over_c", "delta_m"]);
        assert_eq!(r.rows.len(), 6 * 18);
        let last = &r.rows[5 * 18..];
        assert!(last.windows(2).all(|w| w[1][2] > w[0][2]));
    }

    #[test]
    fn delta_m_rejects_ratio_one() {
        let spec = SweepSpec {
            axes: vec![Axis::range("b_over_c", 1.0, 2.0, 3).unwrap()],
            target: SweepTarget::DeltaM {
                c: 1.0,
                p: 1.0,
                q: 1.0,
                scenario: ScenarioBinding::Symmetric { k: 1.0 },
                b_over_c: 2.0,
            },
        };
        assert!(matches!(
            sweep_classical(&spec),
            Err(Error::Domain { name: "b_over_c", .. })
        ));
    }
}
