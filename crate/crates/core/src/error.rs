use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coefficient modes differ (exact vs float)")]
    ModeMismatch,

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("sqrt(nu) = sqrt({0}) is not rational; route needs float mode")]
    IrrationalSqrt(String),

    #[error("weight exponents do not match or cancel: {0}")]
    ExponentMismatch(String),

    #[error("operator routes disagree: {0}")]
    OperatorDisagreement(String),

    #[error("hypergeometric series did not converge after {0} terms")]
    NonConvergence(usize),

    #[error("invalid hypergeometric arguments: {0}")]
    InvalidHypergeometric(String),

    #[error("quadrature order {order} too small for total degree {degree}")]
    QuadratureOrder { order: usize, degree: usize },

    #[error("degree bound exceeded: {0}")]
    DegreeBound(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
