use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants are grouped so the CLI can map them onto its exit statuses:
/// parse problems, math-domain violations, cap/budget refusals and
/// verification mismatches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element does not belong to this field level: {0}")]
    LevelMismatch(String),
    #[error("field of size {0} is too large for this operation")]
    FieldTooLarge(String),
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("degree {0} is too small (at least 2 required)")]
    DegreeTooSmall(usize),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: u128, cap: u128 },
    #[error("candidate space {space} exceeds the census budget {budget}")]
    BudgetExceeded { space: u128, budget: u128 },
    #[error("Möbius denominator vanishes")]
    ZeroDenominator,
    #[error("invariant check failed: {0}")]
    InvariantCheckFailed(String),
    #[error("the degree of any SCRIM is odd; got {0}")]
    EvenDegree(u64),
    #[error("parameter must be odd; got {0}")]
    EvenParameter(u64),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("degree hypothesis violated: {0}")]
    DegreeHypothesisViolated(String),
    #[error("matrix does not have projective order 2")]
    NotInvolution,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
