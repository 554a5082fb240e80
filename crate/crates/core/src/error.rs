use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series constant term must be 1")]
    NotUnitConstant,
    #[error("series must be t + O(t^2) for compositional inversion")]
    NotInvertibleSeed,
    #[error("series coefficient contains the reserved variable t")]
    ContainsSeriesVariable,
    #[error("coefficient index {index} is outside 0..={order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("polynomial is not divisible: {0}")]
    NotDivisible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid variable name {0:?}")]
    InvalidVariable(String),
    #[error("contraction needs delta_{index} = 0")]
    NonzeroEvenDelta { index: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("vertex {vertex} is not {expected}")]
    WrongVertexRole {
        vertex: usize,
        expected: &'static str,
    },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("label {label} at step {step} violates its bound {bound}")]
    LabelOutOfBounds {
        step: usize,
        label: usize,
        bound: usize,
    },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
