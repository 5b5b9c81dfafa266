use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type/rank pair: {type_label} with rank {rank}")]
    InvalidCartan { type_label: String, rank: usize },

    #[error("simple reflection index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { got: usize, expected: usize },

    #[error("subset of simple indices must be nonempty")]
    EmptySubset,

    #[error("coset orbit exceeds the size cap of {cap} nodes")]
    OrbitTooLarge { cap: usize },

    #[error("node {0} does not belong to this poset")]
    ForeignNode(usize),

    #[error("operation requires a cominuscule quotient, got {0}")]
    NotCominuscule(String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimensions {left} and {right} are not complementary in dimension {total}")]
    NotComplementary {
        left: usize,
        right: usize,
        total: usize,
    },

    #[error("golden data mismatch: {0}")]
    Golden(String),

    #[error("Tits context: {0}")]
    Tits(String),

    #[error("no cone embedding found: {0}")]
    NoEmbedding(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}
