use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,

    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("polynomial is constant, it has no roots to classify")]
    ConstantPolynomial,

    #[error("invalid interval: lower end {lo} must be strictly below upper end {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("evaluation at a pole: denominator {denominator} vanishes at {at}")]
    Pole { denominator: String, at: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },

    #[error("parity matrix is not an involution (P*P != E)")]
    ParityNotInvolutory,

    #[error("parity matrix must not depend on eps")]
    ParametricParity,

    #[error("matrix is not hermitean; use the general diagnosis instead")]
    NotHermitean,

    #[error("characteristic polynomial has non-real coefficients; Sturm counting needs real coefficients")]
    NonRealCoefficients,

    #[error("adjugate oracle is limited to dimension {max}, got {found}")]
    OracleTooLarge { max: usize, found: usize },

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("invalid problem file: {0}")]
    Problem(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
