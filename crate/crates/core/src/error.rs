use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("vertex map is not a digraph map: edge {0} -> {1} is sent to a non-edge")]
    NotAGraphMap(String, String),

    #[error("vertex map is not total: `{0}` has no image")]
    PartialMap(String),

    #[error("subgraph is not induced: edge {0} -> {1} is missing")]
    NotInduced(String, String),

    #[error("edge {0} -> {1} leaves the subgraph")]
    EdgeOut(String, String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("path {0} leaves the admissible region")]
    Domain(String),

    #[error("chain is not in the span of the basis: {0}")]
    NotInSpan(String),

    #[error("not a cofibration: {0}")]
    NotCofibration(String),

    #[error("malformed diagram: {0}")]
    Diagram(String),

    #[error("input error: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
