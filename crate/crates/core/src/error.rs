use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("value {0} does not occur in the tableau")]
    ValueAbsent(u32),

    #[error("value {0} occurs only once")]
    NotRepeated(u32),

    #[error("shape {shape} is not in Par({lambda}; {m})")]
    ShapeNotInPar {
        shape: String,
        lambda: String,
        m: usize,
    },

    #[error("gene count mismatch: {0} vs {1}")]
    GeneCountMismatch(usize, usize),

    /// A combinatorial invariant that should hold for every valid input
    /// failed. Seeing this means a bug in a classification rule.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
