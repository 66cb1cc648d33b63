use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported evaluation: {0}")]
    UnsupportedEvaluation(String),
    #[error("cannot parse rational `{0}`")]
    ParseRat(String),
    #[error("cannot parse polynomial `{0}`")]
    ParsePoly(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    EdgeListParse { line: usize, message: String },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("graph is disconnected")]
    DisconnectedGraph,

    #[error("temperature undefined at vertex {0} (degree equals vertex count)")]
    TemperatureUndefined(usize),
    #[error("Banhatti degree undefined on edge {0}-{1}")]
    BanhattiUndefined(usize, usize),
    #[error("graph has {n} vertices, domination solver bound is {max}")]
    GraphTooLarge { n: usize, max: usize },

    #[error("inverse undefined: zero kernel on edge {0}-{1}")]
    InverseUndefined(usize, usize),
    #[error("unknown index name `{name}`{}", suggestion.as_ref().map(|s| format!(" (did you mean `{s}`?)")).unwrap_or_default())]
    UnknownIndexName {
        name: String,
        suggestion: Option<String>,
    },
    #[error("index `{0}` needs a power, e.g. `{0}(a=2)`")]
    MissingPower(String),

    #[error("unknown oracle `{0}`")]
    UnknownOracle(String),
    #[error("parameters {params} outside the stated range of {id}")]
    ParamsOutOfStatedRange { id: String, params: String },
}

pub type Result<T> = std::result::Result<T, Error>;
