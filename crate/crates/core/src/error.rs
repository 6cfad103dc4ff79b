use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("coefficient of t^{t_exp} q^{q_exp} is not divisible by {divisor}")]
    NotDivisible {
        divisor: BigInt,
        t_exp: i64,
        q_exp: i64,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("width of the zero polynomial is undefined")]
    EmptyPolynomial,
    #[error("cannot parse polynomial `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{r} is not coprime to {m}")]
    NotCoprime { r: u64, m: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{0} is not a power of the period prime")]
    NotPrimePower(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivError {
    #[error("{0} components exceed the enumeration limit of 30")]
    TooManyComponents(usize),
    #[error("characteristic {r} is not coprime to the period {m}")]
    BadCharacteristic { r: u64, m: u64 },
    #[error("{d} does not divide the period {m}")]
    NotADivisor { d: u64, m: u64 },
    #[error("invalid link data: {0}")]
    InvalidData(String),
    #[error("orientation orbit {0} is its own reversal; its quantum splitting is not determined")]
    SelfReverseOrbit(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("{0}")]
    FieldNotAdmissible(String),
    #[error("invalid criterion input: {0}")]
    InvalidInput(String),
    #[error("search mass {mass} exceeds the brute-force cap {cap}")]
    SearchCapExceeded { mass: BigInt, cap: u64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no block decomposition: {0}")]
    NoBlockDecomposition(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("HOMFLYPT polynomial is not in the ring: {0}")]
    NotInRing(String),
    #[error("quotient is not a subgroup: {0}")]
    QuotientNotSubgroup(String),
    #[error("resultant of the quotient polynomial vanishes")]
    ZeroDenominator,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
