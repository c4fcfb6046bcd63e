use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("quadratic form error: {0}")]
    Form(String),
    #[error("matrix is singular")]
    Singular,
    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge { what: &'static str, size: u128, limit: u128 },
    #[error("element is not in the group: {0}")]
    NotInGroup(String),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("coset enumeration exceeded {limit} cosets ({live} live, {defined} defined in total)")]
    CosetLimit { limit: usize, live: usize, defined: u64 },
    #[error("coset table is not closed")]
    Unclosed,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("not a 2-group (order {0})")]
    NotTwoGroup(u128),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
