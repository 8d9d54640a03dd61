use thiserror::Error;

/// Errors raised by semigroup and ideal computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generators have gcd {0}, expected 1")]
    NonCoprime(u64),
    #[error("generator {0} is not positive")]
    NonPositive(i64),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("value {needed} lies outside the window [0, {window})")]
    OutOfWindow { needed: i64, window: i64 },
    #[error("ideals belong to different semigroups")]
    ParentMismatch,
    #[error("ideal is not contained in the ring")]
    NotIntegral,
    #[error("ideal is the zero ideal")]
    ZeroIdeal,
    #[error("ideal is the unit ideal")]
    ImproperIdeal,
    #[error("search for {what} exceeded the hard bound {bound}")]
    BoundExceeded { what: &'static str, bound: i64 },
    #[error("semigroup is not symmetric")]
    NotGorenstein,
    #[error("t^{0} does not generate a reduction of the maximal ideal")]
    NotAReduction(i64),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
