use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {edge} out of range (m = {m})")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("loop at vertex {0}: edges must have distinct endpoints")]
    Loop(usize),
    #[error("edge {0} compared with itself")]
    SameEdge(usize),
    /// `line` is 1-based; 0 marks a problem with the input as a whole.
    #[error("{}{msg}", if *line == 0 { String::new() } else { format!("line {line}: ") })]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A proven bound was exceeded. On a correct implementation this never
    /// fires; if it does, the instance is a potential counterexample.
    #[error("bound violated (potential counterexample): {0}")]
    BoundViolation(String),
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Precondition,
    BoundViolation,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Precondition(_) => ErrorKind::Precondition,
            Error::BoundViolation(_) => ErrorKind::BoundViolation,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
