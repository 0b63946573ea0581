use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials do not share a variable list and neither is promotable.
    IncompatibleVars(String),
    /// A variable name is not in the polynomial's variable list.
    UnknownVariable(String),
    /// Exponentiation by a negative exponent.
    NegativeExponent,
    /// Division by a zero polynomial or scalar.
    ZeroDivisor,
    /// Scalar domains cannot be mixed (e.g. Q(alpha) with a radical tower).
    ScalarDomain(String),
    /// Polynomial is not supported in the monomials x_i^k.
    NotInPowers(String),
    /// A coordinate list has the wrong length.
    LengthMismatch { expected: usize, got: usize },
    /// Point is not on the surface.
    NonMember,
    /// Curve type incompatible with the parity of k.
    ParityMismatch(String),
    /// A degenerate alpha value (1, 2 or 3) was requested directly.
    DegenerateAlpha(String),
    /// Sequence of powers does not have constant second differences.
    NotConstantSecondDiffs,
    /// Input too short for the requested operation.
    TooShort { min: usize, got: usize },
    /// All coordinates of a projective point are zero.
    ZeroPoint,
    /// k or n outside the supported range.
    BadParameter(String),
    /// Malformed textual input.
    BadInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IncompatibleVars(s) => write!(f, "incompatible variable lists: {s}"),
            Error::UnknownVariable(s) => write!(f, "unknown variable: {s}"),
            Error::NegativeExponent => write!(f, "negative exponent"),
            Error::ZeroDivisor => write!(f, "division by zero"),
            Error::ScalarDomain(s) => write!(f, "scalar domain mismatch: {s}"),
            Error::NotInPowers(s) => write!(f, "not a polynomial in the k-th powers: {s}"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::NonMember => write!(f, "point is not on the surface"),
            Error::ParityMismatch(s) => write!(f, "parity mismatch: {s}"),
            Error::DegenerateAlpha(s) => write!(f, "degenerate alpha value {s}"),
            Error::NotConstantSecondDiffs => write!(f, "second differences are not constant"),
            Error::TooShort { min, got } => write!(f, "need at least {min} entries, got {got}"),
            Error::ZeroPoint => write!(f, "all coordinates are zero"),
            Error::BadParameter(s) => write!(f, "bad parameter: {s}"),
            Error::BadInput(s) => write!(f, "bad input: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
