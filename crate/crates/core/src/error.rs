use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Invalid `(a, b, c)` triple, index or rational parameter.
    #[error("bad arguments: {0}")]
    BadArgs(String),

    #[error("square root of a negative interval")]
    NegativeOperand,

    #[error("division by an interval containing zero")]
    DivisionByZero,

    /// Two Chebyshev forms (or factors) living in different rings were combined.
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(u64, u64),

    #[error("factor is linear (2k = c); no discriminant")]
    NotQuadratic,

    /// An algebraic identity that must hold failed. Always a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// The numeric discriminant could not round a coefficient safely.
    #[error("coefficient {index} cannot be rounded unambiguously")]
    RoundingAmbiguous { index: usize },

    #[error("instance too large for the resultant oracle (N = {0})")]
    TooLarge(u64),

    #[error("separation audit needs at least two root clusters")]
    EmptyAudit,

    /// The requested curve is singular, so it has no knot diagram.
    #[error("C({a},{b},{c},{phi}) is singular")]
    SingularCurve { a: u64, b: u64, c: u64, phi: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BadArgs(_) => "BadArgs",
            Error::NegativeOperand => "NegativeOperand",
            Error::DivisionByZero => "DivisionByZero",
            Error::AmbientMismatch(..) => "AmbientMismatch",
            Error::NotQuadratic => "NotQuadratic",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::RoundingAmbiguous { .. } => "RoundingAmbiguous",
            Error::TooLarge(_) => "TooLarge",
            Error::EmptyAudit => "EmptyAudit",
            Error::SingularCurve { .. } => "SingularCurve",
            Error::Parse(_) => "Parse",
        }
    }
}
