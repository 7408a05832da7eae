use thiserror::Error;

/// Failures raised by constructors and validated operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator list contains 0")]
    ZeroGenerator,
    #[error("generator {0} is negative")]
    NegativeGenerator(i64),
    #[error("generators have gcd {0}, expected 1")]
    NonCoprime(i64),
    #[error("{0} is not a positive element of the semigroup")]
    NotAMember(i64),
    #[error("ideal generator {0} is not in the semigroup")]
    GeneratorNotInS(i64),
    #[error("ideal generator 0 would make the ideal the whole semigroup")]
    ZeroInIdeal,
    #[error("b = {0} must be odd")]
    EvenB(i64),
    #[error("b = {0} is not in the semigroup")]
    BNotInS(i64),
    #[error("operands belong to different semigroups")]
    ParentMismatch,
    #[error("{what} did not stabilize within {cap} steps")]
    StabilizationFailure { what: &'static str, cap: usize },
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
