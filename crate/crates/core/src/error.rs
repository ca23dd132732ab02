use thiserror::Error;

use crate::words::Alphabet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator {symbol} has index {index}, but genus {genus} allows 1..={max}", max = genus - 1)]
    IndexOutOfRange {
        symbol: String,
        index: u32,
        genus: u32,
    },

    #[error("symbol {symbol} is not part of the {alphabet} alphabet")]
    IllegalSymbol { symbol: String, alphabet: Alphabet },

    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    #[error("genus {genus} is not supported; the construction needs g >= {min}")]
    GenusTooSmall { genus: u32, min: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("cannot substitute zero for a Laurent variable")]
    ZeroSubstitution,

    #[error("image of {word} is not scalar: entry ({row}, {col}) = {value}")]
    NotScalar {
        word: String,
        row: usize,
        col: usize,
        value: String,
    },

    #[error("rescale conditions are incompatible: {0}")]
    Incompatible(String),

    #[error("precision of {bits} bits is outside the supported range; raise or lower --precision")]
    PrecisionExhausted { bits: u32 },

    #[error("rescale unit {lambda}^(1/{degree}) is irrational; use --mode interval or a rational-unit parameter policy")]
    IrrationalUnit { lambda: String, degree: u32 },

    #[error("kernel scalar {0} is not positive; choose another specialization point")]
    NonPositiveScalar(String),

    #[error("matrix is singular")]
    Singular,

    #[error("homology model is inconsistent at {relator}: {detail}")]
    InconsistentModel { relator: String, detail: String },

    #[error("invalid homology model: {0}")]
    InvalidModel(String),

    #[error("invalid matrix file: {0}")]
    Format(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
