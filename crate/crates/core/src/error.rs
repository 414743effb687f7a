use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Verdicts such as "not denestable" are never errors; they are ordinary
/// results. Errors are reserved for malformed input, violated
/// preconditions and failed internal self-checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("divisors of zero undefined")]
    DivisorsOfZero,

    #[error("invalid number {0:?}")]
    InvalidNumber(String),

    #[error("p must be positive")]
    NonPositiveRadicand,

    #[error("p is a perfect square; the element is rational")]
    PerfectSquareRadicand,

    #[error("not a nested radical: b = 0")]
    NotNested,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial must have degree at least {0}")]
    DegreeTooLow(usize),

    #[error("delta undefined for P=0")]
    DeltaUndefined,

    #[error("use direct cube root for P=0")]
    SexticUndefined,

    #[error("not a cubic")]
    NotCubic,

    #[error("precision must be at least 64 bits, got {0}")]
    PrecisionTooLow(u32),

    #[error("degenerate: factor x^3 first")]
    DegenerateSextic,

    #[error("internal certificate check failed: {0}")]
    CertificateFailed(String),
}

impl Error {
    /// True for errors caused by input that is well formed but outside an
    /// operation's domain (square radicand, b = 0, leading coefficient zero,
    /// d = 0 and so on).
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NonPositiveRadicand
                | Error::PerfectSquareRadicand
                | Error::NotNested
                | Error::NotCubic
                | Error::DegenerateSextic
                | Error::PrecisionTooLow(_)
                | Error::DeltaUndefined
                | Error::SexticUndefined
                | Error::ZeroPolynomial
                | Error::DegreeTooLow(_)
                | Error::DivisorsOfZero
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
