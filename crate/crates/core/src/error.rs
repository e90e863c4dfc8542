use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} of size {actual} exceeds the configured cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup of order {order} is not a Sylow {prime}-subgroup")]
    NotSylow { prime: u64, order: usize },
    #[error("{0} is not a p-group for the given prime")]
    NotPGroup(&'static str),
    #[error("morphism leaves the support of the subsystem")]
    MorphismOutsideR,
    #[error("morphism is not a morphism of the ambient system")]
    MorphismNotInSystem,
    #[error("domain mismatch: {0}")]
    DomainMismatch(&'static str),
    #[error("fusion system is not saturated")]
    NotSaturated,
    #[error("support of the subsystem is not strongly closed")]
    NotStronglyClosed,
    #[error("fusion system is not constrained")]
    NotConstrained,
    #[error("fusion system has no realizing group attached")]
    NotRealized,
    #[error("subsystems do not centralize each other")]
    NotCentralizing,
    #[error("no normal subgroup of the model realizes the subsystem")]
    NotFound,
    #[error("more than one normal subgroup of the model realizes the subsystem")]
    NotUnique,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("alarm in {check}: {detail}")]
    TheoremViolation { check: &'static str, detail: String },
}

impl Error {
    pub(crate) fn alarm(check: &'static str, detail: impl Into<String>) -> Self {
        Error::TheoremViolation {
            check,
            detail: detail.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
