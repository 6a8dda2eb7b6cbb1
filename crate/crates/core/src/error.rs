use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid samples: {0}")]
    InvalidSamples(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("operation `{op}` does not accept {decay} input; {hint}")]
    WrongDecayClass {
        op: &'static str,
        decay: String,
        hint: &'static str,
    },

    #[error("point {x} lies outside the grid domain [{a}, {b}]")]
    OutsideDomain { x: f64, a: f64, b: f64 },

    #[error("grid too small: need at least {need} samples, got {got}")]
    GridTooSmall { need: usize, got: usize },

    #[error("aliasing: kmax = {kmax} must be below half the period sample count {half}")]
    Aliasing { kmax: usize, half: usize },

    #[error("cancellation precondition violated: |integral| = {residual:e} exceeds {limit:e}")]
    Cancellation { residual: f64, limit: f64 },

    #[error("integrated terms do not vanish: derivative order {k} has boundary value {value:e} (limit {limit:e})")]
    BoundaryTerms { k: usize, value: f64, limit: f64 },

    #[error(
        "only {available} trustworthy derivatives of the fractional integral, {needed} required"
    )]
    DerivativeBudget { available: usize, needed: usize },

    #[error("no usable points: {0}")]
    NoUsablePoints(String),

    #[error("csv: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
