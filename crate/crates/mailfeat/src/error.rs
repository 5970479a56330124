use std::path::PathBuf;

/// Errors surfaced by parsing, selection and corpus runs.
///
/// Per-email parse failures ([`Error::MalformedMessage`]) are recoverable:
/// corpus runs log them to the error file and keep going. The remaining
/// variants abort a run before any email is processed.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The message has no header/body separator and no parseable header line.
    #[error("malformed message: {0}")]
    MalformedMessage(String),

    /// A `--features` entry named neither a feature group nor a feature ID.
    #[error("unknown feature selector `{0}`")]
    UnknownSelector(String),

    /// The corpus directory does not exist or is not a directory.
    #[error("corpus directory not found: {0}")]
    CorpusNotFound(PathBuf),

    /// The corpus directory contains no `.eml` files.
    #[error("no .eml files found under {0}")]
    EmptyCorpus(PathBuf),

    /// An output file could not be created or written.
    #[error("output not writable: {path}: {source}")]
    OutputNotWritable {
        path: PathBuf,
        source: std::io::Error,
    },

    /// A lexicon, stopword or domain-table file could not be read.
    #[error("cannot read {path}: {source}")]
    ConfigRead {
        path: PathBuf,
        source: std::io::Error,
    },

    /// A domain-table override file is not valid TOML of the expected shape.
    #[error("invalid domain table {path}: {message}")]
    InvalidDomainTable { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
