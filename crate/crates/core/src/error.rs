use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("unsupported field order {0}: prime powers above 64 must be prime")]
    UnsupportedField(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ragged input: expected rows of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("size limit exceeded: {requested} objects requested, cap is {cap}")]
    SizeLimit { requested: String, cap: u64 },
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("dual parameters are invalid: n - 2k + t = {0} < 1")]
    InvalidDualParams(i64),
    #[error("parameters are outside the range of the main theorem")]
    OutOfTheoremRange,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("tree decomposition has no nodes")]
    EmptyTree,
    #[error("not a line of PG(3,q): {0}")]
    NotALine(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
    Error::parse(line, msg)
}
