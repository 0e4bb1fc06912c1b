use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("expression, column {column}: {message}")]
    Expression { column: usize, message: String },
    #[error("heights {0:?} are not a bijection onto 1..=N")]
    InvalidHeights(Vec<u32>),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edges are not composable: head of `{0}` differs from tail of `{1}`")]
    NotComposable(String, String),
    #[error("a cyclic word must contain at least one edge")]
    EmptyWord,
    #[error("element does not belong to this quiver: {0}")]
    QuiverMismatch(String),
    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("expected a linear combination of single necklaces, found monomial `{0}`")]
    NotInLieAlgebra(String),
}

pub type Result<T> = std::result::Result<T, Error>;
