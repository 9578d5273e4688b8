use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
    #[error("non-crystallographic element: rotation order exceeds 6")]
    NonCrystallographic,
    #[error("isometry has no unique fixed point")]
    NoFixedPoint,
    #[error("linear part is not orthogonal")]
    NotOrthogonal,
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("coset enumeration exceeded {max} cosets")]
    ResourceLimit { max: usize },
    #[error("coset table is incomplete")]
    IncompleteTable,
    #[error("unknown model or signature `{0}`")]
    UnknownModel(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("theorem check failed: {0}")]
    TheoremCheck(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
