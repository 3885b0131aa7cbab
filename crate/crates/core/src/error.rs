use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("invalid transform parameters: {0}")]
    InvalidParams(String),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("frequency {0} is not a grid node")]
    NodeNotOnGrid(f64),
    #[error("exponent relation violated: {0}")]
    ExponentRelationViolated(String),
    #[error("singular symbol: |1 + Hg| reaches {min_abs:e} at y = {node} (threshold {threshold:e})")]
    SingularSymbol {
        min_abs: f64,
        node: f64,
        threshold: f64,
    },
    #[error("invalid time: {0}")]
    InvalidTime(String),
    #[error("invalid diffusion coefficient: {0}")]
    InvalidDiffusion(String),
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
