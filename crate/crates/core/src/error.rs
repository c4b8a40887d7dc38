use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("negative edge multiplicity at ({row}, {col})")]
    NegativeMultiplicity { row: usize, col: usize },
    #[error("vertex {0} has outdegree 0")]
    ZeroOutdegree(usize),
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("basis does not have full column rank")]
    RankDeficient,
    #[error("column {0} does not sum to zero")]
    ColumnsNotZeroSum(usize),
    #[error("matrix is not a Laplacian: {0}")]
    NotLaplacian(String),
    #[error("graph is not coEulerian (Pham index {0})")]
    NotCoEulerian(String),
    #[error("sandpile is not stable")]
    NotStable,
    #[error("sandpile is not recurrent")]
    NotRecurrent,
    #[error("configurations carry different chip totals ({0} vs {1})")]
    UnequalTotals(String, String),
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
}
