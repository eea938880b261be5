use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what}: order {order} exceeds the supported maximum {max}")]
    UnsupportedSize {
        what: &'static str,
        order: usize,
        max: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("infeasible construction: {0}")]
    Infeasible(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency check failed. Seeing this means a bug (or a
    /// false mathematical claim), never bad user input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error{} at byte {offset}: {message}", line.map(|l| format!(" on line {l}")).unwrap_or_default())]
    Parse {
        line: Option<usize>,
        offset: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            offset,
            message: message.into(),
        }
    }

    /// Attach a 1-based line number to a parse error.
    pub fn at_line(self, line_no: usize) -> Self {
        match self {
            Error::Parse {
                offset, message, ..
            } => Error::Parse {
                line: Some(line_no),
                offset,
                message,
            },
            other => other,
        }
    }

    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::Io(_)
                | Error::VertexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::UnknownName(_)
                | Error::InvalidParameters(_)
                | Error::UnsupportedSize { .. }
                | Error::Precondition(_)
                | Error::Infeasible(_)
        )
    }
}
