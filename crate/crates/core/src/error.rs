use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("degree {requested} exceeds the configured bound {max}")]
    DegreeBound { requested: usize, max: usize },

    #[error("level {requested} exceeds the enumeration limit {max}")]
    LevelBound { requested: usize, max: usize },

    #[error("pole at u = {u}: factor {index} vanishes")]
    Pole { index: usize, u: String },

    #[error("{nu} does not cover {mu} by a single box")]
    NotCovering { mu: String, nu: String },

    #[error("sequence of length {len} is too short for degree bound {degree}")]
    SequenceTooShort { len: usize, degree: usize },

    #[error("theta must be a positive rational, got {0}")]
    InvalidTheta(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
