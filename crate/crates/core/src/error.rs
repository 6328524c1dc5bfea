use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// The caller handed in something outside an operation's domain.
    Precondition,
    /// An invariant of the implementation broke.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("gcd of two zero forms is undefined")]
    ZeroGcd,
    #[error("resultant needs forms of positive degree")]
    ZeroDegree,
    #[error("projective point with all coordinates zero")]
    ZeroPoint,
    #[error("point does not lie on the flag threefold")]
    NotOnFlag,
    #[error("degenerate conic: q.m = 0")]
    DegenerateConic,
    #[error("identical conics")]
    IdenticalConics,
    #[error("negative degree")]
    NegativeDegree,
    #[error("bidegree ({a},{b}) outside the range a >= 3, b >= 3")]
    OutOfHypothesis { a: i64, b: i64 },
    #[error("bidegree ({0},{1}) is not of the form (a,a)")]
    NonSquareBidegree(u32, u32),
    #[error("linear system is empty")]
    EmptySystem,
    #[error("surface does not contain the conic")]
    NotContained,
    #[error("invalid curve: {0}")]
    InvalidCurve(&'static str),
    #[error("forms must have real coefficients")]
    NonRealForms,
    #[error("forms share a common factor")]
    CommonFactor,
    #[error("parametrization is not birational onto its image")]
    NotBirational,
    #[error("forms must have degree at least {0}")]
    DegreeTooSmall(usize),
    #[error("resultant vanishes on the flag threefold")]
    VanishingResultant,
    #[error("swept conic at a real parameter is degenerate")]
    NotPositive,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {0} is not supported by the census")]
    UnsupportedPrime(u64),
    #[error("prime {0} divides a coefficient denominator")]
    BadPrime(u64),
    #[error("prime {0} is 3 mod 4 and the form has non-real coefficients")]
    NoSqrtMinusOne(u64),
    #[error("form vanishes identically mod {0}")]
    ZeroModP(u64),
    #[error("conic sampling did not reach general position after {0} attempts")]
    SamplingExhausted(usize),
    #[error("internal: {0}")]
    Internal(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Internal(_) | Error::SamplingExhausted(_) => ErrorClass::Internal,
            _ => ErrorClass::Precondition,
        }
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::DegreeMismatch(..) => "degree_mismatch",
            Error::ZeroGcd => "zero_gcd",
            Error::ZeroDegree => "zero_degree",
            Error::ZeroPoint => "zero_point",
            Error::NotOnFlag => "not_on_flag",
            Error::DegenerateConic => "degenerate_conic",
            Error::IdenticalConics => "identical_conics",
            Error::NegativeDegree => "negative_degree",
            Error::OutOfHypothesis { .. } => "out_of_hypothesis",
            Error::NonSquareBidegree(..) => "non_square_bidegree",
            Error::EmptySystem => "empty_system",
            Error::NotContained => "not_contained",
            Error::InvalidCurve(_) => "invalid_curve",
            Error::NonRealForms => "non_real_forms",
            Error::CommonFactor => "common_factor",
            Error::NotBirational => "not_birational",
            Error::DegreeTooSmall(_) => "degree_too_small",
            Error::VanishingResultant => "vanishing_resultant",
            Error::NotPositive => "not_positive",
            Error::NotOddPrime(_) => "not_odd_prime",
            Error::UnsupportedPrime(_) => "unsupported_prime",
            Error::BadPrime(_) => "bad_prime",
            Error::NoSqrtMinusOne(_) => "no_sqrt_minus_one",
            Error::ZeroModP(_) => "zero_mod_p",
            Error::SamplingExhausted(_) => "sampling_exhausted",
            Error::Internal(_) => "internal",
        }
    }
}
