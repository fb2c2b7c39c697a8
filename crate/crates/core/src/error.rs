use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("series has zero constant term and is not invertible")]
    NonUnitConstantTerm,
    #[error("linear system has no unit pivot in column {column}")]
    SingularSystem { column: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("polynomial vanishes at the origin")]
    ZeroAtOrigin,
    #[error("no positive root in the search interval (0, {bound}]")]
    NoRootInRange { bound: String },
    #[error("letter {letter} outside alphabet [1, {alphabet}]")]
    LetterOutOfRange { letter: u32, alphabet: u32 },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("word is not 0-convex")]
    NotConvex,
    #[error("length {length} too short, need at least {needed}")]
    LengthTooShort { length: usize, needed: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("convexity parameter k = {k} not supported here (expected {supported})")]
    UnsupportedK { k: u32, supported: &'static str },
    #[error("endpoint state {0} cannot occur in a mountain permutation")]
    UnrealizableState(String),
    #[error("digraph construction: {0}")]
    Digraph(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
