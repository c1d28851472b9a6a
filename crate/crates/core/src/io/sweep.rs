//! Sweep grids and tabular results.

use serde::Serialize;

use super::csv;
use crate::error::{Error, Result};
use crate::model::{PayoffMatrix, ScenarioBinding};
use crate::scalar::{linspace, Scalar};

/// One named sweep axis with strictly increasing values.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis<T> {
    pub name: String,
    pub values: Vec<T>,
}

impl<T: Scalar> Axis<T> {
    /// `steps` evenly spaced points from `min` to `max`.
    pub fn range(name: &str, min: T, max: T, steps: usize) -> Result<Self> {
        let field = format!("axes.{name}");
        if steps == 0 {
            return Err(Error::config(field, "steps must be >= 1 (empty axis)"));
        }
        if !(min.is_finite() && max.is_finite()) {
            return Err(Error::config(field, "min and max must be finite"));
        }
        if max < min {
            return Err(Error::config(field, format!("max ({max}) < min ({min}): axis is not monotone")));
        }
        if steps == 1 && max != min {
            return Err(Error::config(field, "a single-step axis needs min == max"));
        }
        if steps > 1 && max == min {
            return Err(Error::config(field, "min == max with several steps repeats one value"));
        }
        Ok(Axis {
            name: name.to_string(),
            values: linspace(min, max, steps),
        })
    }

    /// Explicit list of values.
    pub fn values(name: &str, values: Vec<T>) -> Result<Self> {
        let field = format!("axes.{name}");
        if values.is_empty() {
            return Err(Error::config(field, "axis has no values"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::config(field, "values must be finite"));
        }
        if values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::config(field, "values must be strictly increasing"));
        }
        Ok(Axis {
            name: name.to_string(),
            values,
        })
    }
}

/// What a sweep evaluates at each grid point. Axis values override the scalar
/// defaults carried here.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepTarget<T> {
    ClassicalUtility {
        payoffs: PayoffMatrix<T>,
        scenario: ScenarioBinding<T>,
        p: T,
        q: T,
    },
    DeltaM {
        c: T,
        p: T,
        q: T,
        scenario: ScenarioBinding<T>,
        b_over_c: T,
    },
    QuantumUtility {
        payoffs: PayoffMatrix<T>,
        scenario: ScenarioBinding<T>,
        theta_a: T,
        theta_b: T,
        phi_a: T,
        phi_b: T,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec<T> {
    pub axes: Vec<Axis<T>>,
    pub target: SweepTarget<T>,
}

impl<T: Scalar> SweepSpec<T> {
    pub fn axis(&self, name: &str) -> Option<&Axis<T>> {
        self.axes.iter().find(|a| a.name == name)
    }

    /// Rejects axes the target does not understand, and duplicates.
    pub fn check_axes(&self, allowed: &[&str]) -> Result<()> {
        for (i, axis) in self.axes.iter().enumerate() {
            if !allowed.contains(&axis.name.as_str()) {
                return Err(Error::config(
                    format!("axes[{i}].name"),
                    format!("unknown axis `{}`; expected one of {}", axis.name, allowed.join(", ")),
                ));
            }
            if self.axes[..i].iter().any(|a| a.name == axis.name) {
                return Err(Error::config(format!("axes[{i}].name"), format!("duplicate axis `{}`", axis.name)));
            }
        }
        Ok(())
    }

    /// Number of grid points: product of the axis sizes.
    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.values.len()).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every grid point, first axis slowest.
    pub fn grid_points(&self) -> Vec<Vec<T>> {
        let total = self.len();
        (0..total)
            .map(|mut index| {
                let mut point = vec![T::zero(); self.axes.len()];
                for (slot, axis) in point.iter_mut().zip(&self.axes).rev() {
                    let n = axis.values.len();
                    *slot = axis.values[index % n];
                    index /= n;
                }
                point
            })
            .collect()
    }

    /// Coordinate of `point` along the named axis, if that axis is swept.
    pub fn coordinate(&self, point: &[T], name: &str) -> Option<T> {
        self.axes.iter().position(|a| a.name == name).map(|i| point[i])
    }
}

/// Table of sweep output; every row carries its input coordinates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult<T> {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<T>>,
}

impl<T: Scalar> SweepResult<T> {
    pub fn new(columns: &[&str], rows: Vec<Vec<T>>) -> Self {
        SweepResult {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<T>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        csv::render(&self.columns, self.rows.iter().map(|r| r.iter().map(|v| v.as_f64())))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "columns": self.columns,
            "rows": self.rows.iter()
                .map(|r| r.iter().map(|v| csv::json_number(v.as_f64())).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_validation() {
        assert!(Axis::range("p", 0.0_f64, 1.0, 0).is_err());
        assert!(Axis::range("p", 1.0_f64, 0.0, 3).is_err());
        assert!(Axis::range("p", 0.0_f64, 1.0, 1).is_err());
        assert_eq!(Axis::range("p", 0.3_f64, 0.3, 1).unwrap().values, vec![0.3]);
        assert!(Axis::values("k", Vec::<f64>::new()).is_err());
        assert!(Axis::values("k", vec![0.5, 0.5]).is_err());
        let err = Axis::range("q", 0.0_f64, 1.0, 0).unwrap_err();
        assert!(err.to_string().contains("axes.q"));
    }

    #[test]
    fn row_count_is_product_of_axis_sizes() {
        let spec = SweepSpec {
            axes: vec![
                Axis::range("a", 0.0_f64, 1.0, 3).unwrap(),
                Axis::range("b", 0.0, 1.0, 4).unwrap(),
                Axis::values("c", vec![1.0, 2.0]).unwrap(),
            ],
            target: SweepTarget::DeltaM {
                c: 1.0,
                p: 1.0,
                q: 1.0,
                scenario: ScenarioBinding::Symmetric { k: 1.0 },
                b_over_c: 2.0,
            },
        };
        let pts = spec.grid_points();
        assert_eq!(pts.len(), 24);
        assert_eq!(pts[0], vec![0.0, 0.0, 1.0]);
        assert_eq!(pts[1], vec![0.0, 0.0, 2.0]);
        assert_eq!(pts[2], vec![0.0, 1.0 / 3.0, 1.0]);
        assert_eq!(pts[23], vec![1.0, 1.0, 2.0]);
    }
}
