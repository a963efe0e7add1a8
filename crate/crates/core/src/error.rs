use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Numerical failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside the domain ({reason})")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },
    /// A tangent-type singularity: the evaluation point sits inside the
    /// guard band of a pole.
    #[error("pole at z = {z}")]
    Pole { z: f64 },
    #[error("singular point z = {z}")]
    Singular { z: f64 },
    #[error("quadrature did not converge, best estimate {estimate}")]
    Convergence { estimate: f64 },
    #[error("degenerate curve at z = {z}: speed vanishes")]
    DegenerateCurve { z: f64 },
    #[error("derivative of order {order} is not available")]
    MissingDerivative { order: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
}

pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain {
            name,
            value,
            reason: "must be finite",
        })
    }
}
