use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown vertex id `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{0}` is a loop")]
    LoopEdge(String),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is bipartite")]
    Bipartite,
    #[error("graph is not simple")]
    NotSimple,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("matroid is not connected")]
    MatroidDisconnected,
    #[error("matroid is bipartite")]
    MatroidBipartite,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("scale bound exceeded: {what} is {actual}, limit {limit}")]
    ScaleBound {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
