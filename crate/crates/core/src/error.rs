use crate::scalar::{PadicContext, Valuation};
use crate::sendov::Regime;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime {0} is too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("ramification index must be at least 1")]
    InvalidRamification,
    #[error("operands live in different fields: {0} vs {1}")]
    ContextMismatch(PadicContext, PadicContext),
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("element has valuation {0} < 0 and has no residue")]
    NegativeValuation(Valuation),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("degree {got} is below the required minimum {min}")]
    DegreeTooLow { got: usize, min: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("roots leave the closed unit disc: coefficient a_{index} has valuation {valuation}")]
    HypothesisViolated { index: usize, valuation: Valuation },
    #[error("criterion applies to the {expected} regime but the degree is {actual}")]
    WrongRegime { expected: Regime, actual: Regime },
    #[error("the z^n - z family requires p | n (p = {p}, n = {n})")]
    PrimeDoesNotDivideDegree { p: u64, n: usize },
    #[error("distance profile of size {size} is inconsistent with a factor of degree {degree}; is the factor really irreducible?")]
    ProfileInconsistent { size: usize, degree: usize },
    #[error("factors {0} and {1} share a root")]
    FactorsNotCoprime(usize, usize),
    #[error("factor {0} must be monic of degree at least 1")]
    InvalidFactor(usize),
    #[error("factor and multiplicity lists differ in length ({factors} vs {mults})")]
    MultiplicityCount { factors: usize, mults: usize },
    #[error("factorization is empty")]
    EmptyFactorization,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("exponent pi^{exponent} is out of range for ramification index {ram}")]
    RamExponentOutOfRange { exponent: u64, ram: u32 },
    #[error("valuation and absolute-value forms of the criterion disagree")]
    CriterionMismatch,
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
