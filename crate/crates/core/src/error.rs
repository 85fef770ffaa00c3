use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("cannot compose: source of left factor {left} differs from target of right factor {right}")]
    ComposeMismatch { left: String, right: String },
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("infinite dimensional: nonzero path {0} exceeds the probe bound")]
    InfiniteDimensional(String),
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("path {0} is zero in the algebra")]
    ZeroPath(String),
    #[error("operation `{0}` needs a monomial or truncated ideal")]
    UnsupportedIdeal(&'static str),
    #[error("indeterminate: step cap of {0} reached")]
    Indeterminate(usize),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("no decomposition against the catalog: {0}")]
    NoDecomposition(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("parse error in {section} (line {line}): {message}")]
    Parse {
        section: String,
        line: usize,
        message: String,
    },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn parse(section: &str, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            section: section.to_string(),
            line,
            message: message.into(),
        }
    }
}
