use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("degree and exponents must be positive (got {0})")]
    ZeroExponent(&'static str),

    #[error("field order {order} exceeds the configured cap {cap}")]
    FieldTooLarge { order: u128, cap: u64 },

    #[error("parameters overflow 128-bit arithmetic")]
    Overflow,

    #[error("no irreducible polynomial of degree {degree} over GF({p}) found")]
    NoIrreducible { p: u32, degree: u32 },

    #[error("{q} is not the order of a subfield of GF({order})")]
    NotSubfield { q: u64, order: u64 },

    #[error("element is not in the subfield of order {q}")]
    NotInSubfield { q: u64 },

    #[error("N = {index} does not divide r - 1 = {group_order}")]
    IndexDoesNotDivide { index: u64, group_order: u128 },

    #[error("N must be at least 2 (got {0})")]
    IndexTooSmall(u64),

    #[error("zero element where a nonzero one is required")]
    ZeroElement,

    #[error("(Z - 1) = {z_minus_one} is not divisible by N = {index}")]
    ZCountNotDivisible { z_minus_one: i128, index: u64 },

    #[error("period-based weight requires N | (r-1)/(q-1)")]
    SubfieldNotInFirstClass,

    #[error("value {num}/{den} is not an integer")]
    NonIntegral { num: i128, den: i128 },

    #[error("weight {weight} outside [0, {n}]")]
    WeightOutOfRange { weight: i128, n: u128 },

    #[error("period polynomial coefficient {index} is {distance:.3e} away from the exact value")]
    PeriodRounding { index: usize, distance: f64 },

    #[error("no solution of {kind} = {target} with the requested normalization")]
    NoDiophantineSolution { kind: &'static str, target: u128 },

    #[error("closed form not applicable: {0}")]
    NotApplicable(String),
}
