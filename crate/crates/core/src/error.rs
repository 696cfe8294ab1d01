use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A basis index that cannot be represented for the chosen system.
    #[error("index error: {0}")]
    Index(String),

    #[error("arity error: expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },

    /// Quadrature or floating-point failure.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A configured size or overflow limit was exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Two objects that must agree (pool vs tensor, path vs spec) do not.
    #[error("compatibility error: {0}")]
    Compatibility(String),

    #[error("unsupported multiplicity k = {0}")]
    UnsupportedMultiplicity(usize),

    /// The time grid does not contain every basis discontinuity.
    #[error("grid error: {0}")]
    Grid(String),

    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn from_json(err: serde_path_to_error::Error<serde_json::Error>) -> Self {
        let path = err.path().to_string();
        Error::config(
            if path == "." { String::new() } else { path },
            err.into_inner().to_string(),
        )
    }

    /// True for errors caused by floating-point or quadrature failure.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Numeric(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
