use thiserror::Error;

/// Errors produced by geometric constructors and operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("point is on or below the projection equator (z <= tolerance)")]
    EquatorialPoint,

    #[error("blow-up input coincides with the pole or its antipode")]
    PoleInput,

    #[error("point set is not contained in any open hemisphere")]
    NotHemispherical,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("point is not on the body boundary")]
    NotOnBoundary,

    #[error("hemisphere does not support the body")]
    NotSupporting,

    #[error("point is not interior to the body")]
    NotInterior,

    #[error("halfplane family leaves an unbounded intersection (angular gap >= pi)")]
    Unbounded,

    #[error("intersection has empty interior")]
    EmptyInterior,

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("support function must be positive: field {field}")]
    NotPositive { field: String },
}

impl GeomError {
    pub fn invalid(name: &str, reason: impl Into<String>) -> Self {
        GeomError::InvalidParameter {
            name: name.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
