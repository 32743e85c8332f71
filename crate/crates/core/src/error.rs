use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("strand count mismatch: B{left} vs B{right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator {index} is out of range for B{strands}")]
    GeneratorOutOfRange { index: i32, strands: usize },

    #[error("a braid group needs at least one strand")]
    NoStrands,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("closure is not a knot ({components} components)")]
    NotAKnot { components: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("Alexander polynomial is not certifiably nonzero at {omega}")]
    DegenerateOmega { omega: String },

    #[error("eigenvalue sign not certified at {omega}: |lambda| = {magnitude:e} <= {threshold:e}")]
    PrecisionFailure { omega: String, magnitude: f64, threshold: f64 },

    #[error("braid is not conjugate to its inverse via the given conjugator")]
    InvalidConjugator,

    #[error("factorization witness does not evaluate to the target braid")]
    InvalidWitness,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("generator {index} at line {line}, column {column} is out of range for B{strands}")]
    ParseRange { line: usize, column: usize, index: i64, strands: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
