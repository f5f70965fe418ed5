use thiserror::Error;

/// Errors raised by clutter construction and invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {contained} is contained in edge {container}")]
    NonAntichain { contained: String, container: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{0}` listed twice in the ground set")]
    DuplicateVertex(String),
    #[error("edge {0} listed twice")]
    DuplicateEdge(String),
    #[error("edges must be nonempty")]
    EmptyEdge,
    #[error("the added set must be nonempty")]
    EmptySet,
    #[error("ground set has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex `{0}` is isolated; strip isolated vertices first")]
    IsolatedVertex(String),
    #[error("{0} is not an edge of the clutter")]
    NotAnEdge(String),
    #[error("the clutter has no edges")]
    NoEdges,
    #[error("the clutter is improper (unit ideal)")]
    ImproperClutter,
    #[error("colon by {0} yields the unit ideal")]
    ImproperColon(String),
    #[error("invalid family: {0}")]
    BadSpec(String),
    #[error("k = {k} outside 2..={n}")]
    BadK { k: usize, n: usize },
    #[error("clutter is not uniform")]
    NotUniform,
    #[error("{what} = {size} exceeds the limit {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error("{edges} edges exceed the Taylor enumeration limit {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("invalid field: {0}")]
    BadField(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// Resource guards, as opposed to malformed input or broken invariants.
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::TooManyEdges { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
