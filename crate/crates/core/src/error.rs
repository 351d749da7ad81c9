use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),

    #[error("malformed algebra document: {0}")]
    Malformed(String),

    #[error("index {index} out of range for dimension {dim} ({context})")]
    IndexOutOfRange {
        index: usize,
        dim: usize,
        context: &'static str,
    },

    #[error("duplicate structure constant for ({0}, {1}, {2})")]
    DuplicateEntry(usize, usize, usize),

    #[error("duplicate twisting-map entry for ({0}, {1})")]
    DuplicateAlphaEntry(usize, usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("twisting map is not multiplicative: α(e{i}·e{j}) ≠ α(e{i})·α(e{j})")]
    NotMultiplicative { i: usize, j: usize },

    #[error("the source algebra already carries a non-identity twisting map")]
    AlreadyTwisted,

    #[error("twisting map must be the identity for this operation")]
    AlphaNotIdentity,

    #[error("linear map is not an algebra morphism")]
    NotAMorphism(Box<CheckReport>),

    #[error("derived algebra depth {0} exceeds the maximum of 8")]
    DerivedTooDeep(u32),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),

    #[error("{name} expects {expected} parameters, got {found}")]
    ParamCount {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("expected {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl From<serde_json::Error> for AlgebraError {
    fn from(e: serde_json::Error) -> Self {
        AlgebraError::Malformed(e.to_string())
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
