use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base: {0}")]
    InvalidBase(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("invalid bundle: {0}")]
    InvalidBundle(String),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("bundle `{bundle}` is not supported over base `{base}`")]
    Incompatible { base: String, bundle: String },
    #[error("restriction to curves is undefined for {0} bundles")]
    RestrictionUndefined(&'static str),
    #[error("cannot twist: {0}")]
    TwistUnsupported(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("wrong arity: expected {expected} classes, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("class depends on the parameter t; evaluate it first")]
    ParameterDependent,
    #[error("product has degree > 1 in t")]
    DegreeOverflow,
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("missing certificate: {0}")]
    MissingCertificate(String),
    #[error("strict nefness of the divisor is not established: {0}")]
    StrictNefnessUnknown(String),
    #[error("inconsistent certificates: {0}")]
    Inconsistent(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("theorem route and direct criterion disagree: {0}")]
    RouteDisagreement(String),
    #[error("parse error: {0}")]
    Parse(String),
}
