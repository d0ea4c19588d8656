use std::fmt;

use thiserror::Error;

use crate::polynomial::AlgebraMode;

/// A syntax error in one of the text formats, with a 1-based byte offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("algebra mode mismatch: {left:?} vs {right:?}")]
    ModeMismatch { left: AlgebraMode, right: AlgebraMode },
    #[error("variable count mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("indices must be distinct, got {0} twice")]
    EqualIndices(usize),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("the scalar alpha must be nonzero")]
    ZeroAlpha,
    #[error("polynomial must not involve x{0}")]
    VariableDependence(usize),
    #[error("endomorphism is not triangular")]
    NotTriangular,
    #[error("endomorphism is not unitriangular")]
    NotUnitriangular,
    #[error("endomorphism is not elementary")]
    NotElementary,
    #[error("no inverse available: {0}")]
    NotInvertible(String),
    #[error("the shift must be nonzero")]
    ZeroShift,
    #[error("layer violation: {0}")]
    LayerViolation(String),
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("not in the derived subgroup: {0}")]
    NotInDerivedSubgroup(String),
    #[error("side condition violated: {0}")]
    SideConditionViolated(String),
    #[error("degree product p*q = {0} is below 2")]
    DegreeTooSmall(u64),
    #[error("word is not reduced: {0}")]
    UnreducedWord(String),
    #[error("word is conjugate into a single cyclic factor")]
    WordInCyclicFactor,
    #[error("unsupported generator indices ({0}, {1}); expected (1, 1) or (1, 2)")]
    UnsupportedIndices(usize, usize),
    #[error("input is the identity automorphism")]
    TrivialInput,
    #[error("endomorphism is not an involution")]
    NotInvolution,
    #[error("invalid document: {0}")]
    Document(String),
    #[error("verification failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
