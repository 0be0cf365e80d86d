use thiserror::Error;

/// Errors produced by graph construction, verification, and search.
#[derive(Debug, Error)]
pub enum Error {
    #[error("tree edges do not form a tree: {0}")]
    NotATree(String),
    #[error("tree vertex {vertex} has degree {degree}, expected 1 or 3")]
    BadDegree { vertex: String, degree: usize },
    #[error("tree order {0} is below the minimum of 4")]
    OrderTooSmall(usize),
    #[error("cycle does not match the leaf set: {0}")]
    CycleMismatch(String),
    #[error("cycle order admits no plane embedding: leaves across tree edge {0}-{1} are not a contiguous arc")]
    NonPlanarOrder(String, String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("coloring is partial: vertex {0} has no class")]
    PartialColoring(usize),
    #[error("vertex {vertex} has class {class}, outside 1..={max}")]
    ClassOutOfRange { vertex: usize, class: u32, max: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("enumeration bound {requested} exceeds the configured cap {cap}")]
    BoundTooLarge { requested: usize, cap: usize },
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("unknown instance name: {0}")]
    UnknownName(String),
    #[error("graph has {vertices} vertices, above the distance-oracle bound {cap}")]
    OracleTooLarge { vertices: usize, cap: usize },
    #[error("schedule has {0} classes, above the solver cap of {1}")]
    ScheduleTooLong(usize, usize),
    #[error("bad tree: {0}")]
    BadTree(String),
    #[error("constructive coloring and exact-solver fallback both failed: {0}")]
    FallbackExhausted(String),
    #[error("search hit its limit before resolving")]
    LimitReached,
    #[error("bad schedule: {0}")]
    BadSchedule(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
