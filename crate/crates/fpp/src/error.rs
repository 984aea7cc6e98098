use crate::graph::VertexId;
use thiserror::Error;

/// Errors surfaced by graph generation, searches, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{generator}: invalid vertex {vertex}: {reason}")]
    InvalidVertex {
        generator: String,
        vertex: VertexId,
        reason: String,
    },

    #[error("ball materialization exceeded the vertex cap of {cap} (radius {radius})")]
    BallCapExceeded { cap: usize, radius: u64 },

    #[error("search exceeded the expansion cap of {cap} settled vertices")]
    SearchCapExceeded { cap: usize },

    #[error("vertices {a} and {b} are not adjacent")]
    NotAdjacent { a: VertexId, b: VertexId },

    #[error("path index range {i}..{j} out of bounds for {len} vertices")]
    IndexOutOfRange { i: usize, j: usize, len: usize },

    #[error("slope is undefined for identical endpoints {v}")]
    UndefinedSlope { v: VertexId },

    #[error("empty sample grid")]
    EmptyGrid,

    #[error("sampler could not meet its budget: {0}")]
    SamplerBudget(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not enough data: {0}")]
    InsufficientData(String),

    #[error("bad spec string `{input}`: {reason}")]
    BadSpec { input: String, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code for the CLI: 2 precondition, 3 guard/inexact, 4 IO.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BallCapExceeded { .. } | Error::SearchCapExceeded { .. } => 3,
            Error::Io { .. } | Error::Json(_) => 4,
            _ => 2,
        }
    }
}
