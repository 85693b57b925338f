use thiserror::Error;

/// Errors surfaced by the algebra kernels and the front end.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("coefficient {text} is not reducible in characteristic {p}")]
    BadCoefficient { text: String, p: u64 },

    #[error("characteristic must be 0 or a prime, got {0}")]
    NotPrime(u64),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("operation requires positive characteristic")]
    CharacteristicZero,

    #[error("operation requires characteristic zero")]
    CharacteristicPositive,

    #[error("{0} is not a power of the characteristic")]
    NotPPower(String),

    #[error("bad prime {p}: divides a coefficient denominator")]
    BadPrime { p: u64 },

    #[error("prime {p} divides the boundary denominator {d}; no perturbation is available for the divisor part")]
    BoundaryDenominator { p: u64, d: u64 },

    #[error("prime {p} divides the auxiliary modulus {d}")]
    PDividesModulus { p: u64, d: u64 },

    #[error("colon by the zero ideal")]
    ColonByZero,

    #[error("{0}")]
    InvalidPair(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("dimension {0} exceeds the supported bound 4")]
    DimensionTooLarge(usize),

    #[error("{0} is not a monomial ideal")]
    NotMonomial(String),

    #[error("element g does not lie in a^{m}")]
    NotInPower { m: u64 },

    #[error("drew the zero combination {retries} times; give up")]
    ZeroCombination { retries: u32 },

    #[error("expansion too large: {0}")]
    TooLarge(String),

    #[error("invalid catalog: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
