use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for a graph on {count} vertices")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("{count} vertices exceed the supported maximum of {max}")]
    TooManyVertices { count: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("invalid field `{0}`: expected q, 2, 3 or p:<prime>")]
    Field(String),

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error("vertex {tip} is not a whisker tip attached to {base}")]
    NotWhisker { tip: usize, base: usize },

    #[error("witness does not match the graph: {0}")]
    WitnessMismatch(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
