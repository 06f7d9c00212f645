use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty tree literal")]
    EmptyInput,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("trees must have at least one leaf")]
    ZeroLeaves,
    #[error("rank {rank} out of range for {leaves}-leaf trees (1..={count})")]
    RankOutOfRange {
        leaves: usize,
        rank: u128,
        count: u128,
    },
    #[error("tree with {0} leaves is too large to index")]
    IndexOverflow(usize),
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at x = 0, no power series expansion")]
    SingularAtZero,
    #[error("series coefficient {0} is not an integer")]
    NonIntegerCoefficient(usize),
    #[error("denominator has no positive real root")]
    NoPositiveRoot,
    #[error("pattern set is empty")]
    EmptyPatternSet,
    #[error("the one-leaf tree has no parent tree")]
    NoParent,
    #[error("comb size must be at least {min}, got {got}")]
    CombTooSmall { min: usize, got: usize },
    #[error("not a permutation of 1..{len}: {entries:?}")]
    InvalidPermutation { len: usize, entries: Vec<usize> },
    #[error("permutation {0} contains 231")]
    Contains231(String),
    #[error("malformed permutation literal {0:?}")]
    PermutationSyntax(String),
    #[error("malformed generating function JSON: {0}")]
    GfJson(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
