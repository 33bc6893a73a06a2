use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group needs at least one cyclic factor")]
    EmptyModuli,
    #[error("cyclic factor of order {0} is below two")]
    ModulusBelowTwo(u64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("enumeration of {requested} items exceeds the bound {bound}")]
    EnumerationBoundExceeded { requested: u128, bound: u64 },
    #[error("the zero code has no genus")]
    ZeroCode,
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("length {0} is too short for this operation")]
    LengthTooShort(usize),
    #[error("code is not MDS")]
    NotMds,
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("argument out of range: {0}")]
    RangeError(String),
    #[error("enumerator mass {mass} does not match code size {size}")]
    MassMismatch { mass: String, size: String },
    #[error("MacWilliams transform produced a non-integral coefficient")]
    NonIntegralResult,
    #[error("minimum distances d = {d}, d_perp = {d_perp} must both be at least 2")]
    MinimumDistanceTooSmall { d: usize, d_perp: usize },
    #[error("weight distribution is inconsistent with the code context: {0}")]
    InconsistentDistribution(String),
    #[error("code size is not an integral power of the group order")]
    NonIntegerGenus,
    #[error("contexts are not mutually dual: {0}")]
    ContextMismatch(String),
    #[error("polynomial degree {degree} exceeds the bound {bound}")]
    DegreeTooHigh { degree: usize, bound: i64 },
    #[error("series order {order} is below the required {required}")]
    OrderTooShort { order: usize, required: usize },
    #[error("genus pair ({g}, {g_perp}) mixes zero and nonzero genus")]
    MixedGenusZero { g: i64, g_perp: i64 },
    #[error("extension F_{{{p}^{k}}} is not supported")]
    UnsupportedExtension { p: u32, k: u32 },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("point count {n1} over F_{q} violates the Hasse bound for genus {genus}")]
    HasseBoundViolation { n1: u64, q: u64, genus: u32 },
    #[error("scalar action is invalid: {0}")]
    InvalidScalarAction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
