use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("plane wave precondition violated: {0}")]
    PlaneWave(String),

    #[error("map is not an automorphism of the {kind} algebra: {reason}")]
    NotAutomorphism { kind: crate::AlgebraKind, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
