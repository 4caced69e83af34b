use thiserror::Error;

use crate::polycore::VariableId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix size mismatch: {0}x{0} vs {1}x{1}")]
    SizeMismatch(usize, usize),

    #[error("partition {parts:?} does not fit in the {k}x{l} box")]
    OutsideBox { parts: Vec<u32>, k: usize, l: usize },

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<u32>),

    #[error("bialternant division left a nonzero remainder")]
    NonzeroRemainder,

    #[error("variable {0} is not part of the ambient ring")]
    VariableOutsideRing(VariableId),

    #[error("monomial orders differ")]
    OrderMismatch,

    #[error("ambient rings differ")]
    RingMismatch,

    #[error("colon by the zero polynomial")]
    ZeroDivisor,

    #[error("ideal is not homogeneous for the grading")]
    Inhomogeneous,

    #[error("variable {0} has weight 0; the Hilbert series is undefined")]
    ZeroWeight(VariableId),

    #[error("ring has {0} variables; at most {max} are supported", max = crate::groebner::MAX_VARS)]
    TooManyVariables(usize),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("requires k >= l (got k={k}, l={l})")]
    NeedsKAtLeastL { k: usize, l: usize },

    #[error("k and l must be positive (got k={k}, l={l})")]
    InvalidShape { k: usize, l: usize },

    #[error("resource limit: {needed} variables needed, limit is {limit} (use --force or SOERGEL_MAX_VARS)")]
    ResourceLimit { needed: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
