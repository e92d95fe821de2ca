use thiserror::Error;

/// Which of the four incidence conditions of an edge exchange is violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExchangeDefect {
    VertexOutOfRange,
    VerticesNotDistinct,
    VxNotAnEdge,
    UyNotAnEdge,
    VyAlreadyAnEdge,
    UxAlreadyAnEdge,
}

impl std::fmt::Display for ExchangeDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ExchangeDefect::VertexOutOfRange => "a vertex is out of range",
            ExchangeDefect::VerticesNotDistinct => "x, y, u, v are not distinct",
            ExchangeDefect::VxNotAnEdge => "vx is not an edge",
            ExchangeDefect::UyNotAnEdge => "uy is not an edge",
            ExchangeDefect::VyAlreadyAnEdge => "vy is already an edge",
            ExchangeDefect::UxAlreadyAnEdge => "ux is already an edge",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree sequence {0:?} is not graphical")]
    NotGraphical(Vec<usize>),
    #[error("degree sequence has no positive term")]
    NoPositiveTerm,
    #[error("graph has no vertex of positive degree")]
    NoPositiveVertex,
    #[error("invalid edge exchange: {0}")]
    InvalidExchange(ExchangeDefect),
    #[error("graphs have different orders ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("order {order} exceeds the configured cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("malformed graph6 at byte {offset}: {reason}")]
    MalformedGraph6 { offset: usize, reason: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("no realization reaches the requested independence number")]
    NotAchievable,
    #[error("graph is not a forest")]
    NotAForest,
    #[error("no embedding exists")]
    NoEmbedding,
    #[error("target degrees have odd sum")]
    ParityViolation,
    #[error("no factor with the prescribed degrees exists")]
    Infeasible,
    #[error("graph is not regular")]
    NotRegular,
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error("no decomposition of the requested shape: {0}")]
    DecompositionNotFound(String),
    #[error("maximum degree {degree} exceeds k = {k}")]
    DegreeTooHigh { degree: usize, k: usize },
    #[error("packing failed: {0}")]
    PackingFailed(String),
    #[error("schema violation: {0}")]
    SchemaViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
