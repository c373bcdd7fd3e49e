use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph too large for exhaustive search ({size} vertices, limit {limit})")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("graph is not cubic")]
    NotCubic,
    #[error("input graph is not ASP")]
    NotAspInput,
    #[error("input graph is not ASP-P")]
    NotAsppInput,
    #[error("graph does not match family tag: {0}")]
    TagMismatch(String),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not 3-connected")]
    NotTriconnected,
    #[error("graph is not virtually 3-connected")]
    NotVirtuallyThreeConnected,
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
