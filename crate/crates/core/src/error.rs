use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported extension degree m = {m} (allowed: {allowed})")]
    UnsupportedDegree { m: u32, allowed: &'static str },

    #[error("polynomial {poly:#b} is not primitive over GF(2)")]
    NotPrimitive { poly: u32 },

    #[error("degenerate BCH code for m = {m}: {reason}")]
    DegenerateBch { m: u32, reason: String },

    #[error("parameter map (a, b) -> Tr(ax + bx^{e}) is not injective for m = {m}")]
    NonInjective { m: u32, e: u32 },

    #[error("exponent {e} is not a Gold exponent 2^j+1 with gcd(j, {m}) = 1")]
    NotGold { m: u32, e: u32 },

    #[error("construction self-check failed: {0}")]
    SelfCheck(String),

    #[error("coordinate {index} out of range for length {n}")]
    CoordinateOutOfRange { index: usize, n: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("code size {size} exceeds the cap {cap} for {operation}")]
    SizeCap {
        operation: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("blocks do not all have the same weight ({first} and {other})")]
    MixedWeights { first: usize, other: usize },

    #[error("blocks do not form a 1-design")]
    NotOneDesign,

    #[error("weight distribution sums to {sum}, expected code size {size}")]
    InconsistentSize { sum: u64, size: u64 },

    #[error("parameters (n = {n}, d = {d}) give a non-integral intersection number")]
    NonIntegral { n: u64, d: u64 },

    #[error("bad Kerdock parameters (n = {n}, d = {d})")]
    BadKerdockParameters { n: u64, d: u64 },

    #[error("distance sets overlap under complementation: {overlap:?}")]
    PreconditionViolation { overlap: Vec<usize> },

    #[error("restriction of the Hamming scheme is not an association scheme")]
    NotAScheme,

    #[error("code is not linear")]
    NotLinear,

    #[error("no codeword of weight {weight} has a 1 in coordinate {coordinate}")]
    EmptyGenerators { coordinate: usize, weight: usize },

    #[error("expected 2 components, found {0}")]
    ComponentCount(u64),

    #[error("no codeword with pattern 01 at coordinates ({p}, {q})")]
    PatternNotFound { p: usize, q: usize },

    #[error("sampled mode requires a seed")]
    MissingSeed,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("bad magic bytes in code file")]
    BadMagic,

    #[error("unsupported code file version {0}")]
    VersionMismatch(u8),

    #[error("code file truncated: expected {expected} bytes, found {actual}")]
    Truncated { expected: u64, actual: u64 },

    #[error("code file has {0} trailing bytes")]
    TrailingBytes(u64),

    #[error("record {index} is not strictly greater than its predecessor")]
    OrderViolation { index: u64 },

    #[error("record {index} has bits set beyond length {n}")]
    PaddingBits { index: u64, n: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
