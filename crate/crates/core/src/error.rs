//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes or axes do not line up.
    #[error("shape error: {0}")]
    Shape(String),

    /// An index (token id, class label, axis position) is out of range.
    #[error("index error: {0}")]
    Index(String),

    /// A caller violated an operation's contract.
    #[error("contract error: {0}")]
    Contract(String),

    /// A token id does not fit the vocabulary, or a word is not in the lexicon.
    #[error("vocab error: {0}")]
    Vocab(String),

    /// Invalid configuration (task spec, experiment plan, model config).
    #[error("config error: {0}")]
    Config(String),

    /// Malformed input data (corpus, JSONL files).
    #[error("data error: {0}")]
    Data(String),

    /// A sequence does not fit the model context window.
    #[error("context error: {0}")]
    Context(String),

    /// A generator could not satisfy its constraints.
    #[error("generation error: {0}")]
    Generation(String),

    /// A numeric result left the finite range (NaN or infinity).
    #[error("numerical error: {0}")]
    NonFinite(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(#[from] CheckpointError),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Distinct failure modes when reading a model checkpoint.
#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("corrupt header: {0}")]
    Header(String),

    #[error("unsupported format version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },

    #[error("truncated payload: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },

    #[error("payload contains non-finite values in tensor {0}")]
    NonFinitePayload(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
