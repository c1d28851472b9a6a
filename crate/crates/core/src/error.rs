use thiserror::Error;

/// Errors raised by model construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A numeric input lies outside its admissible domain.
    #[error("{name} = {value} is outside its domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    /// The requested closed form does not exist for these inputs.
    #[error("degenerate: {0}")]
    Degenerate(String),

    /// The request falls outside what the closed form covers.
    #[error("out of scope: {0}")]
    OutOfScope(String),

    /// Sampling was requested from a Kraus set with a negative eigenvalue.
    #[error(
        "quasi-probability regime: (2k-1)(2k'-1) = {product} < -1/3 \
         (k = {k}, k' = {kprime}); outcome {outcome} has probability {probability}"
    )]
    QuasiProbability {
        k: f64,
        kprime: f64,
        product: f64,
        outcome: &'static str,
        probability: f64,
    },

    /// A configuration field failed validation.
    #[error("config error at `{field}`: {message}")]
    Config { field: String, message: String },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }

    pub(crate) fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
