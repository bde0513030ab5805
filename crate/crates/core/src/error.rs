use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    /// Edge-list parse failure, with a 1-based line number.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("{what} requires n <= {max}, got {n}")]
    SizeBound { what: &'static str, n: usize, max: usize },

    #[error("{what} requires n >= {min}, got {n}")]
    OrderTooSmall { what: &'static str, n: usize, min: usize },

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("vertex {0} lies on no 3-face")]
    EmptyThreeFaceStar(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),

    #[error("unknown graph name: {0}")]
    UnknownName(String),

    /// The search ran out of time before the value was pinned down. The
    /// exact value lies in `lower..=upper`.
    #[error("search budget exhausted; value lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize },
}
