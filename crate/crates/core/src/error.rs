use thiserror::Error;

use crate::oracle::QuadError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{field}: transition frequency must be > 0 (got {value})")]
    NonPositiveFrequency { field: &'static str, value: f64 },

    #[error("{field}: width must be >= 0 (got {value})")]
    NegativeWidth { field: &'static str, value: f64 },

    #[error("{field}: squared dipole moment must be > 0 (got {value})")]
    NonPositiveDipole { field: &'static str, value: f64 },

    #[error("{field}: value must be finite")]
    NonFinite { field: &'static str },

    #[error("{field}: number density must be >= 0 (got {value})")]
    NegativeDensity { field: &'static str, value: f64 },

    #[error("medium has no atoms (n_g + n_e must be > 0)")]
    EmptyMedium,

    #[error("density must be > 0 (got {0})")]
    NonPositiveDensity(f64),

    #[error("temperature must be > 0 (got {0})")]
    NonPositiveTemperature(f64),

    #[error("response evaluated exactly on a real-axis pole at omega = {omega}")]
    PoleOnAxis { omega: f64 },

    #[error("coherent response is not defined on the imaginary frequency axis")]
    CoherentOnImaginaryAxis,

    #[error("imaginary-axis frequency must be >= 0 (got {0})")]
    NegativeImaginaryFrequency(f64),

    #[error("separation must be > 0 (got {0})")]
    ZeroSeparation(f64),

    #[error("regulator eta = {eta} exceeds the limit {limit}")]
    RegulatorTooLarge { eta: f64, limit: f64 },

    #[error("width {gamma} is not below the transition frequency {omega}; closed form invalid")]
    WidthTooLarge { gamma: f64, omega: f64 },

    #[error("not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergent(#[from] QuadError),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("unknown figure `{0}` (expected one of 4a, 4b, 5, 6, 7, 7a, 7b)")]
    UnknownFigure(String),
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Errors that belong to a single sweep abscissa rather than the run as a whole.
    pub fn is_point_local(&self) -> bool {
        matches!(
            self,
            Error::PoleOnAxis { .. }
                | Error::WidthTooLarge { .. }
                | Error::NotApplicable(_)
                | Error::RegulatorTooLarge { .. }
                | Error::QuadratureNonConvergent(_)
        )
    }
}
