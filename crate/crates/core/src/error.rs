//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the summarization pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("no valid records in corpus input ({skipped} line(s) skipped)")]
    EmptyCorpus { skipped: usize },

    #[error("malformed {what} on line {line}: {msg}")]
    Format {
        what: &'static str,
        line: usize,
        msg: String,
    },

    #[error("retweet graph is empty: corpus has no retweet interactions")]
    EmptyGraph,

    #[error("largest connected component has {size} node(s); need at least 4")]
    ComponentTooSmall { size: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("information gain is undefined for all-zero contingency counts")]
    ZeroContingency,

    #[error("empty hashtag vocabulary (minimum frequency {min_freq})")]
    EmptyVocabulary { min_freq: usize },

    #[error("training set must contain at least two examples of each class")]
    SingleClass,

    #[error("need {need} candidate tweet(s), only {have} available")]
    TooFewCandidates { need: usize, have: usize },

    #[error("no tweets to select from after filtering")]
    EmptySelection,

    #[error("summaries cover different topics: {0:?} vs {1:?}")]
    TopicMismatch(String, String),

    #[error("artifact does not match corpus: {0}")]
    CorpusMismatch(String),

    #[error("unsupported model file: {0}")]
    Model(String),

    #[error("degenerate community assignment: {0}")]
    DegenerateAssignment(String),
}

pub type Result<T> = std::result::Result<T, Error>;
