use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not an irreducible monic polynomial of degree {1} over F_{2}")]
    ReducibleModulus(Vec<u64>, usize, u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("working modulus p^{0} for p = {1} does not fit in 62 bits")]
    PrecisionOverflow(u32, u64),
    #[error("matrix determinant is not a p-adic unit")]
    NonUnitDeterminant,
    #[error("degree d = {d} must be at least n + 1 = {}", n + 1)]
    DegreeTooSmall { n: usize, d: usize },
    #[error("symbolic computation limited to N <= 15 and p <= 5 (got N = {n_monomials}, p = {p})")]
    SizeGuardExceeded { n_monomials: usize, p: u64 },
    #[error("coefficient of U-monomial {0} is zero")]
    ZeroUnitCoefficient(usize),
    #[error("pivot coordinate {0} of the evaluation point is not a unit")]
    NonUnitPivotCoordinate(usize),
    #[error("instance is not ordinary: det of the Hasse-Witt matrix vanishes")]
    NonOrdinary,
    #[error("enumeration over F_{{{q}^{s}}} exceeds the point budget")]
    EnumerationBudgetExceeded { q: u64, s: u32 },
    #[error("point counts are inconsistent with a smooth zeta numerator: {0}")]
    InconsistentCounts(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
