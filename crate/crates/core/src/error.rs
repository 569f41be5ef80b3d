use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("undeclared identifier `{name}` at offset {pos}")]
    UndeclaredIdentifier { name: String, pos: usize },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("quotient is infinite-dimensional: no pure power of `{0}` is a leading term")]
    InfiniteDimensional(String),

    #[error("the ideal is the whole ring; quotient is zero")]
    ZeroQuotient,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("multiplication table is not commutative at basis pair ({0}, {1})")]
    NotCommutative(usize, usize),

    #[error("multiplication table is not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("multiplication table has no identity element")]
    MissingIdentity,

    #[error("algebra dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: usize, cap: usize },

    #[error("degenerate form: {0}")]
    DegenerateForm(String),

    #[error("operation requires a field ground (Q); got the Laurent ground")]
    GroundNotAField,

    #[error("ground rings differ")]
    GroundMismatch,

    #[error("specialization point must be nonzero")]
    ZeroSpecialization,

    #[error("coordinate is not a Laurent polynomial in q: {0}")]
    NonLaurent(String),

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("normalization failure: {0}")]
    Normalization(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    /// True for failures of a mathematical invariant, as opposed to bad input.
    pub fn is_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_) | Error::Normalization(_))
    }
}
