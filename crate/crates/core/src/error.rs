use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Input validation and precondition failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    NonPositive,
    #[error("{value} exceeds the supported limit {limit}")]
    TooLarge { value: u64, limit: u64 },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("{0} requires a nonempty input")]
    Empty(&'static str),
    #[error("symbol member {member} out of range 1..{n}")]
    SymbolOutOfRange { member: u64, n: u64 },
    #[error("symbol not closed under negation: {present} present, {missing} absent mod {n}")]
    NotNegationClosed { present: u64, missing: u64, n: u64 },
    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },
    #[error("divisor {d} exceeds {n}/2")]
    DivisorTooLarge { d: u64, n: u64 },
    #[error("duplicate entry {0}")]
    Duplicate(u64),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: u64, n: u64 },
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("divisor set is not generating: gcd(D, {n}) = {gcd}")]
    NotGenerating { n: u64, gcd: u64 },
    #[error("graph is not integral")]
    NotIntegral,
    #[error("spectrum has {found} distinct eigenvalues, need at least 4")]
    TooFewDistinct { found: usize },
    #[error("spectrum is not real")]
    NotReal,
    #[error("expected an exact spectrum")]
    NotExact,
    #[error("n = {n} exceeds the dense matrix bound {limit}")]
    DenseTooLarge { n: u64, limit: u64 },
    #[error("n must be {expected}, got {n}")]
    Parity { n: u64, expected: &'static str },
    #[error("{0}")]
    Family(String),
    #[error("invalid rational angle: {0}")]
    Angle(String),
    #[error("parse error: {0}")]
    Parse(String),
}
