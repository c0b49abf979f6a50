use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vector is not in the Leech lattice: {0}")]
    NotInLeech(String),
    #[error("vector is not in the lattice: {0}")]
    NotInLattice(String),
    #[error("point set too large for octad lookup: {0} points")]
    TooManyPoints(usize),
    #[error("Leech vector of norm {norm} has unexpected shape {shape}")]
    UnexpectedShape { norm: i64, shape: String },
    #[error("root pairing mismatch: direct {direct}, rule {rule}")]
    PairingMismatch { direct: i64, rule: i64 },
    #[error("degenerate Gram matrix")]
    Degenerate,
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("class is not integral: {0}")]
    NotIntegral(String),
    #[error("map is not well defined: {0}")]
    IllDefined(String),
    #[error("map is not an isometry: {0}")]
    NotIsometry(String),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
    #[error("height reduction did not terminate after {0} steps")]
    NoTermination(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
