use thiserror::Error;

/// Errors raised by the algebra, division and completion routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent overflow")]
    Overflow,
    #[error("monomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("monomials live in rings with {0} and {1} variables")]
    AmbientMismatch(u32, u32),
    #[error("variable index {index} out of range for {nvars} variables")]
    VarOutOfRange { index: u32, nvars: u32 },
    #[error("monomial is not a term of the binomial")]
    NotATerm,
    #[error("duplicate leading monomial")]
    DuplicateMonomial,
    #[error("monomial not present")]
    NotFound,
    #[error("more than one Janet divisor found; the monomial set is corrupted")]
    AmbiguousJanetDivisor,
    #[error("no generators")]
    EmptyInput,
    #[error("zero lattice vector")]
    ZeroVector,
    #[error("cost vector is zero")]
    ZeroCost,
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
