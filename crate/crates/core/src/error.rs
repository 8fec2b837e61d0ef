use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of generators is {0}, must be 1")]
    GcdNotOne(u64),
    #[error("the generated semigroup is all of N")]
    TrivialSemigroup,
    #[error("integer overflow during {0}")]
    ArithmeticOverflow(&'static str),
    #[error("formula evaluated to a non-integer value")]
    NonIntegerResult,
    #[error("point set is not downward closed: contains {point:?} but not {missing:?}")]
    NotDownwardClosed { point: Vec<u32>, missing: Vec<u32> },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point {0:?} is not in the lift domain")]
    PointNotInDomain(Vec<u32>),
    #[error("basis matrix is singular")]
    SingularLattice,
    #[error("max weight of B is zero")]
    DegenerateMax,
    #[error("denominator d(B) is zero")]
    DegenerateDenominator,
    #[error("weight vector must satisfy 1 <= gamma_1 <= ... <= gamma_{{e-1}}")]
    WeightOrderViolation,
    #[error("weight vector entries must be positive")]
    NonPositiveWeight,
    #[error("search budget of {budget} candidates exceeded after {examined}")]
    SearchBudgetExceeded { budget: u64, examined: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
