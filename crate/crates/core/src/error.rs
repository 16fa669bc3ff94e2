use thiserror::Error;

/// Errors raised by the algebra and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division: {dividend} is not a multiple of {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("inner series of a composition must have zero constant term, found {0}")]
    NonZeroConstant(String),

    #[error("series reversion needs f_0 = 0 and a unit f_1")]
    NotRevertible,

    #[error("exp needs a zero constant term, found {0}")]
    ExpDomain(String),

    #[error("log needs constant term 1, found {0}")]
    LogDomain(String),

    #[error("coefficient index {index} exceeds truncation order {order}")]
    BeyondTruncation { index: usize, order: usize },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("production matrix is not tridiagonal: entry ({row}, {col}) = {value}")]
    NotTridiagonal {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("superdiagonal entry ({row}, {col}) = {value}, expected 1")]
    SuperdiagonalNotOne {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("need at least {needed} terms, have {available}")]
    InsufficientTerms { needed: usize, available: usize },

    #[error("degenerate parameters for the {family} closed form: {denominator} vanishes; use the definition sum")]
    Degenerate { family: String, denominator: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("network failure fetching {url}: {message}")]
    Network { url: String, message: String },

    #[error("HTTP status {status} fetching {url}")]
    HttpStatus { url: String, status: u16 },

    #[error("no cached b-file for {id} at {path} (offline)")]
    CacheMiss { id: String, path: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
