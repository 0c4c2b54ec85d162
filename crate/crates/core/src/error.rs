use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("underlying graph is not simple (vertices {0} and {1})")]
    NotSimple(usize, usize),

    #[error("digraph is not a tournament")]
    NotTournament,

    #[error("tournament is not regular on an odd number of vertices")]
    NotRegularTournament,

    #[error("digraph is not balanced (vertex {0} has out-degree != in-degree)")]
    Unbalanced(usize),

    #[error("digraph is not strongly connected")]
    NotStronglyConnected,

    #[error("vertex {vertex} has odd degree")]
    OddDegree { vertex: usize },

    #[error("multiplicity between {0} and {1} is odd")]
    OddMultiplicity(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} exceeds cap {limit}")]
    CapExceeded { what: &'static str, limit: u64 },

    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
