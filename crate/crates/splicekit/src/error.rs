use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input file could not be parsed; carries a 1-based line number.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Operation called outside its domain.
    #[error("{0}")]
    Domain(String),

    /// A splice diagram was requested for a graph without nodes.
    #[error("string graph: splice diagram undefined here")]
    StringGraph,

    /// A verified mathematical invariant failed; indicates a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
