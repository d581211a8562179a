use thiserror::Error;

use crate::diagram::BettiDiagram;
use crate::hilbert::RatPolynomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree sequence must be strictly increasing and nonempty: {0:?}")]
    InvalidSequence(Vec<i64>),

    #[error("degree sequence {0:?} is too short for a pure diagram (need at least 2 entries)")]
    SequenceTooShort(Vec<i64>),

    #[error("operation is undefined on the empty diagram")]
    EmptyDiagram,

    #[error("{numerator} is not divisible by (1-t)^{exponent}")]
    NotDivisible {
        numerator: RatPolynomial,
        exponent: usize,
    },

    #[error("diagram is not a nonnegative combination of pure diagrams: {reason}")]
    NotInCone {
        reason: String,
        residual: BettiDiagram,
    },

    #[error("invalid index vector {0:?}: entries must be nonnegative and weakly increasing")]
    InvalidIndexVector(Vec<i64>),

    #[error("index vector {index:?} is not admissible for k = {k}")]
    NotAdmissible { index: Vec<i64>, k: u32 },

    #[error("removal sets overlap for index vector {index:?} with k = {k}, r = {r}")]
    Overlap { index: Vec<i64>, k: u32, r: i64 },

    #[error("invalid secant parameters k = {k}, r = {r}: need r >= 2k+3")]
    InvalidParams { k: u32, r: i64 },

    #[error("index {i} out of range {low}..={high}")]
    OutOfRange { i: i64, low: i64, high: i64 },

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("parse error: {0}")]
    Parse(String),
}
