use thiserror::Error;

use crate::constructions::KneserCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed interval [{lo}, {hi}]: lower end must be below upper end")]
    MalformedInterval { lo: String, hi: String },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("horizon mismatch: {left} vs {right}")]
    HorizonMismatch { left: usize, right: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("pair is not realizable: {0:?}")]
    Infeasible(KneserCertificate),

    #[error("no two-interval set realizes ({alpha}, {beta}, {gamma})")]
    NoTwoIntervalWitness {
        alpha: String,
        beta: String,
        gamma: String,
    },

    #[error("construction failed verification: {0}")]
    Verification(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
