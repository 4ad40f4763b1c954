use thiserror::Error;

use crate::heffter::Feasibility;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed interval [{lo},{hi}]_{step}: endpoints are not congruent modulo the step")]
    MalformedInterval { lo: i64, hi: i64, step: i64 },

    #[error("invalid block: {0}")]
    InvalidBlock(String),

    #[error("parameter out of domain for {what}: {detail}")]
    Domain { what: &'static str, detail: String },

    #[error("template {template} expects {expected}, got {got}")]
    Arity {
        template: &'static str,
        expected: String,
        got: String,
    },

    #[error("self-check failed in {step}: {detail}")]
    SelfCheck { step: String, detail: String },

    #[error("infeasible partition: {0}")]
    Partition(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("no construction here: {0}")]
    ExternalConstruction(String),

    #[error("parameters belong to a dedicated construction: {0}")]
    Redirected(String),

    #[error("not constructible by this library: {0:?}")]
    Unsupported(Feasibility),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }

    pub(crate) fn self_check(step: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::SelfCheck {
            step: step.into(),
            detail: detail.into(),
        }
    }
}
