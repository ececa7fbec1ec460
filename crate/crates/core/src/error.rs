use thiserror::Error;

/// Errors raised by constructions whose preconditions fail.
///
/// Check operations never return these for a mathematical failure; they
/// return a [`Verdict`](crate::verdict::Verdict) instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("scalars from different fields were combined")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live in different spaces")]
    SpaceMismatch,
    #[error("{operation} needs {divisor} to be invertible, but the field has characteristic {characteristic}")]
    Characteristic {
        operation: &'static str,
        divisor: u64,
        characteristic: u64,
    },
    #[error("map is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("map is not super skew-symmetric: {0}")]
    NotSkew(String),
    #[error("not a Lie superalgebra: {0}")]
    NotLie(String),
    #[error("not a valid action: {0}")]
    InvalidAction(String),
    #[error("subspace is not maximal isotropic")]
    NotMaximalIsotropic,
    #[error("subspace is not a Dirac structure: {0}")]
    NotDirac(String),
    #[error("l3 is not identically zero")]
    NotStrict,
    #[error("invalid crossed module: {0}")]
    InvalidCrossedModule(String),
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("bilinear form is not invariant: {0}")]
    NotInvariant(String),
    #[error("exhaustive check too large: dimension {dim} exceeds the limit {limit}")]
    GuardExceeded { dim: usize, limit: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
