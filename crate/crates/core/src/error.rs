use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is even; only odd characteristic is supported")]
    EvenCharacteristic(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid field parameters: {0}")]
    InvalidParams(String),
    #[error("field of order {order} exceeds the table bound {bound}")]
    FieldTooLarge { order: u128, bound: u64 },
    #[error("inversion of zero")]
    InverseOfZero,
    #[error("{0} does not divide the extension degree {1}")]
    NotADivisor(u32, u32),
    #[error("element is not a member of the requested subfield")]
    NotInSubfield,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("h = {h} out of range for m = {m} (allowed {min}..={max})")]
    HOutOfRange { h: u32, m: u32, min: u32, max: u32 },
    #[error("coefficient shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("type is undefined for the zero form")]
    UndefinedType,
    #[error("closed form produced a non-integral value at rank {rank}, type {tau}")]
    NonIntegral { rank: usize, tau: i8 },
    #[error("closed form produced a negative value at rank {rank}, type {tau}")]
    NegativeCount { rank: usize, tau: i8 },
    #[error("closed form mass {found} does not match expected {expected}")]
    MassMismatch { found: String, expected: String },
    #[error("enumeration of {size} items exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
    #[error("polynomial coefficient lies outside the base field")]
    CoefficientOutsideBase,
    #[error("family {family} is not defined for {parity} m")]
    FamilyParity { family: &'static str, parity: &'static str },
    #[error("integer overflow evaluating {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
