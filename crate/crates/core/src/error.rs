use std::path::PathBuf;
use std::time::Duration;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    NodeOutOfRange { u: usize, v: usize, n: usize },

    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("round {round}: source {node} is already cooled")]
    SourceAlreadyCooled { round: usize, node: usize },

    #[error("round {round}: source {node} is not a node of the graph")]
    SourceOutOfRange { round: usize, node: usize },

    #[error("graph has {n} nodes, above the solver cap of {cap}")]
    OverLimit { n: usize, cap: usize },

    #[error("search exceeded its time budget of {0:?}")]
    TimeBudgetExceeded(Duration),

    #[error("subset enumeration refused: {n} nodes exceeds cap {cap}; use a family-specific profile")]
    ProfileOverCap { n: usize, cap: usize },

    #[error("strategy does not apply: {0}")]
    StrategyMismatch(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("malformed file {path}: {msg}")]
    Malformed { path: PathBuf, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
