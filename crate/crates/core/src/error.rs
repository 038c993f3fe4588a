use thiserror::Error;

/// Errors raised by the exact and numeric routines in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series not invertible")]
    SeriesNotInvertible,
    #[error("pole at u = 1")]
    PoleAtUOne,
    #[error("pole of rational function at u = {0}")]
    Pole(String),
    #[error("index {index} out of table range (max index {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("table too short: need index {needed}, table holds up to {available}")]
    TableTooShort { needed: usize, available: usize },
    #[error("quadrature failed to reach tolerance {tol:e} within {panels} panels (achieved estimate {achieved:e})")]
    QuadratureTolerance { tol: f64, achieved: f64, panels: usize },
    #[error("series domain violated: {0}")]
    SeriesDomainViolated(String),
    #[error("pole in a: a = {0} is a nonpositive integer")]
    PoleInA(f64),
    #[error("conditionally divergent point: m = 1 at integer x = {0}")]
    ConditionallyDivergent(f64),
    #[error("enumeration bound exceeded: need 0 <= n <= m <= {bound}, got m = {m}, n = {n}")]
    EnumerationBound { m: usize, n: usize, bound: usize },
    #[error("unknown identity id '{0}'")]
    UnknownIdentity(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("non-finite value produced: {0}")]
    NonFinite(String),
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
