use thiserror::Error;

/// Errors produced by the tensor engine, the subject model, and the
/// attribution pipeline.
#[derive(Error, Debug)]
pub enum Error {
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    Dim {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("degenerate vector: norm below 1e-12 in cosine similarity")]
    DegenerateVector,

    #[error("prefix length {len} exceeds model capacity {max}")]
    Capacity { len: usize, max: usize },

    #[error("token id {id} outside vocabulary of size {vocab}")]
    Vocab { id: usize, vocab: usize },

    #[error("tape error: {0}")]
    Tape(String),

    #[error("training diverged at epoch {epoch}: non-finite loss")]
    Training { epoch: usize },

    #[error("mask optimization failed at epoch {epoch}: non-finite loss")]
    Optimization { epoch: usize },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
