use thiserror::Error;

/// Errors raised by the exact and numeric kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("square root of a negative rational: {0}")]
    NegativeSqrt(String),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("projective point has all coordinates zero")]
    ZeroPoint,
    #[error("points do not span a line (rank < 2)")]
    DegenerateLine,
    #[error("linear substitution matrix is singular")]
    SingularMatrix,
    #[error("form is not homogeneous of degree {expected}: exponent {exponent:?}")]
    Inhomogeneous { expected: u8, exponent: [u8; 4] },
    #[error("degree {0} exceeds the supported maximum of 3")]
    DegreeTooHigh(u8),
    #[error("duplicate monomial {0:?}")]
    DuplicateMonomial([u8; 4]),
    #[error("slice parameter t must be positive (no real points with x + y + z <= 0), got {0}")]
    NonPositiveT(String),
    #[error("point is not a singular point of the form")]
    NotSingular,
    #[error("point is not on the surface")]
    OffSurface,
    #[error("u must be nonzero")]
    ZeroU,
    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("unknown surface {0:?} (expected hcubic, canon or rotated-scaled)")]
    UnknownSurface(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
