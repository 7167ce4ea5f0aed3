use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("polynomial must have degree at least 1, got {0}")]
    ConstantPolynomial(String),

    #[error("polynomial {0} has zero constant term, its order is undefined")]
    ZeroConstantTerm(String),

    #[error("irreducible factor of degree {degree} exceeds the supported cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("polynomial order overflows u64")]
    OrderOverflow,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("extension degree {0} outside 1..=13")]
    FieldDegree(usize),

    #[error("modulus {0} is not primitive")]
    NotPrimitive(String),

    #[error("length {0} must be odd and positive")]
    EvenLength(usize),

    #[error("generator {generator} does not divide x^{n}+1 (remainder {remainder})")]
    NotADivisor {
        n: usize,
        generator: String,
        remainder: String,
    },

    #[error("code lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("message degree must be below k = {k}")]
    MessageTooLong { k: usize },

    #[error("word has degree >= n = {n}")]
    WordTooLong { n: usize },

    #[error("syndrome table needs {required} entries, budget is {budget}")]
    TableBudget { required: u128, budget: u64 },

    #[error("no error pattern of weight <= {t} explains the syndrome")]
    DecodeFailure { t: usize },

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("scheme rejected: {0}")]
    Chain(String),

    #[error("shift allowance a_l + a_r = {sum} must be below ord(f) = {order}")]
    Allowance { sum: usize, order: u64 },

    #[error("simulation error: {0}")]
    Simulation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
