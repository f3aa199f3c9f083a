use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported regime N={n}, k={k}: need N >= 4 and k > N")]
    UnsupportedRegime { n: i64, k: i64 },

    #[error("truncation too shallow: degree {required} requested, series kept to q^{available}")]
    Truncation { required: u32, available: u32 },

    #[error("operator is not invertible: constant part is not the unit")]
    NotUnit,

    #[error("index {index} out of range for {what}")]
    OutOfRange { what: &'static str, index: i64 },

    #[error("linear system at q^{degree} for C~_{sector} has a {dimension}-dimensional solution space")]
    NonUnique {
        sector: usize,
        degree: u32,
        dimension: usize,
    },

    #[error("linear system at q^{degree} for C~_{sector} is inconsistent")]
    Inconsistent { sector: usize, degree: u32 },

    #[error("coordinate row {index} does not integrate: constant term {constant}")]
    NotIntegrable { index: usize, constant: String },

    #[error("cannot reduce correlator {key}: {reason}")]
    Reduction { key: String, reason: String },

    #[error("invalid rational {input:?}: {reason}")]
    InvalidRational { input: String, reason: String },

    #[error("malformed cache field {key:?}: {reason}")]
    CacheParse { key: String, reason: String },

    #[error("cache schema version {found}, expected {expected}")]
    CacheVersion { found: i64, expected: i64 },

    #[error("cache is for (N={found_n}, k={found_k}), requested (N={n}, k={k})")]
    CacheMismatch {
        n: u32,
        k: u32,
        found_n: i64,
        found_k: i64,
    },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    #[error("unknown named combination {0:?}")]
    UnknownCombination(String),
}

pub type Result<T> = std::result::Result<T, Error>;
