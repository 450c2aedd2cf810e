use std::io;

/// Errors produced by parsing, grouping, metric and provider operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input document, with a 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Malformed rules file, with a 1-based line number.
    #[error("rules file, line {line}: {msg}")]
    Rules { line: usize, msg: String },
    /// Contract violation on otherwise well-formed data.
    #[error("{0}")]
    Domain(String),
    /// Embedding provider failure: unreachable service, wrong dimension.
    #[error("embedding provider '{provider}': {msg}")]
    Provider { provider: String, msg: String },
    /// A few-shot example whose source and target chunk counts differ.
    #[error("shot {index}: {src} source chunks but {tgt} target chunks")]
    MisalignedShot { index: usize, src: usize, tgt: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn rules(line: usize, msg: impl Into<String>) -> Self {
        Error::Rules {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn provider(provider: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Provider {
            provider: provider.into(),
            msg: msg.into(),
        }
    }

    /// True for failures of an external service, as opposed to bad input.
    pub fn is_provider(&self) -> bool {
        matches!(self, Error::Provider { .. })
    }
}
