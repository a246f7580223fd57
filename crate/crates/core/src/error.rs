use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("girth below 5: {0}")]
    GirthTooSmall(String),

    #[error("vertex {0} is not in any bunch")]
    NotInAnyBunch(usize),

    #[error("vertex {0} is not in the second sphere of the center")]
    NotInS2(usize),

    #[error("bunch {0} already has colored vertices")]
    BunchAlreadyColored(usize),

    #[error("no transversal for bunch {bunch}: indices {violator:?} have fewer available colors than members")]
    HallFailure { bunch: usize, violator: Vec<usize> },

    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("adjacent vertices {0} and {1} share a color")]
    ImproperColoring(usize, usize),

    #[error("coloring is not total: vertex {0} is uncolored")]
    NotTotal(usize),

    #[error("greedy completion failed: vertex {0} has no available color")]
    CompletionFailed(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("swap repair stuck on bunch {bunch} at vertex {vertex}")]
    RepairStuck { bunch: usize, vertex: usize },

    #[error("construction failed at step `{step}`")]
    ConstructionFailed { step: String, log: Vec<String> },

    #[error("no strategy applies: {}", .0.join("; "))]
    NoStrategyApplies(Vec<String>),

    #[error("set family too large for backtracking: {0} sets")]
    FamilyTooLarge(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generation failed after {0} attempts")]
    GenerationFailed(usize),

    #[error("cycle needs at least 3 vertices, got {0}")]
    TooSmall(usize),

    #[error("malformed graph6 at byte {position}: {reason}")]
    MalformedGraph6 { position: usize, reason: String },

    #[error("malformed DIMACS at line {line}: {reason}")]
    MalformedDimacs { line: usize, reason: String },

    #[error("certificate schema violation at {path}: {reason}")]
    SchemaViolation { path: String, reason: String },
}
