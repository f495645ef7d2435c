use thiserror::Error;

/// Errors raised by the exact-arithmetic and invariant pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("field {field} has no element of multiplicative order {order}")]
    RootUnavailable { field: String, order: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("unsupported characteristic {characteristic} for an algebra of dimension {dim}")]
    UnsupportedCharacteristic { characteristic: u64, dim: usize },
    #[error("map is not an algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("cannot extend {from} to {to}")]
    IncompatibleExtension { from: String, to: String },
    #[error("covector is not a character: {0}")]
    NotACharacter(String),
    #[error("integral space has dimension {0}, expected 1")]
    IntegralDimNotOne(usize),
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("integral order is infinite or exceeds the cap")]
    OrderInfinite,
    #[error("subspace is not a Hopf ideal")]
    NotHopfIdeal,
    #[error("relator violated: {0}")]
    RelatorViolation(String),
    #[error("family {0} declares no truncation data")]
    TruncationUndeclared(String),
    #[error("invalid parameters for {preset}: {reason}")]
    InvalidParams { preset: String, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
