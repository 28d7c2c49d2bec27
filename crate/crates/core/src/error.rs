use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable '{found}' (expected '{expected}')")]
    UnknownVariable { expected: char, found: char },
    #[error("interval contains {roots} roots, expected exactly one")]
    NotIsolating { roots: usize },
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("affine scale must be nonzero")]
    ZeroScale,
    #[error("threshold {0} exceeds 1")]
    InvalidThreshold(String),
    #[error("sign could not be separated from zero after {0} bisections")]
    RefinementExhausted(u32),
    #[error("iteration order {n} exceeds the configured cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("coefficient of b^{power} is not integral after substituting c = b/4")]
    IntegralityViolation { power: usize },
    #[error("degree {degree} does not match period {period}")]
    DegreeMismatch { degree: usize, period: u32 },
    #[error("cycle polynomial does not divide f_c^n(z) - z")]
    NotAFactor,
    #[error("multiplier is {actual}, expected {expected}")]
    MultiplierMismatch { expected: String, actual: String },
    #[error("escape not decided within {0} iterations")]
    Unresolved(u32),
    #[error("orbit did not settle on a cycle within {0} iterations")]
    NoConvergence(u32),
    #[error("cycle found but not of exact period {0}")]
    PeriodMismatch(u32),
    #[error("precision insufficient: {0}")]
    PrecisionInsufficient(String),
    #[error("pipeline mismatch: {0}")]
    PipelineMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
