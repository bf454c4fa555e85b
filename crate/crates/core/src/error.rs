use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph encoding, located by byte offset (graph6) or 1-based line (edge list).
    #[error("parse error at {location}: {message}")]
    Parse { location: Location, message: String },

    #[error("catalog error: {message} (offending: {})", offending.join(", "))]
    Catalog { message: String, offending: Vec<String> },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("capability exceeded: {0}")]
    Capability(String),

    /// The second inertia-type bound needs a k-partially walk-regular graph.
    #[error("bound not applicable: graph is not {k}-partially walk-regular")]
    Inapplicable { k: usize },

    #[error("bound undefined: {0}")]
    Undefined(String),

    #[error("trace condition violated: sum of m_j p(theta_j) = {residual:e}")]
    TraceViolated { residual: f64 },

    #[error("polynomial degree {degree} exceeds profile depth {cap}")]
    DegreeMismatch { degree: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("oracle skipped: {note}")]
    Skipped { note: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Byte(usize),
    Line(usize),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Byte(b) => write!(f, "byte {b}"),
            Location::Line(l) => write!(f, "line {l}"),
        }
    }
}

impl Error {
    pub(crate) fn parse_byte(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { location: Location::Byte(offset), message: message.into() }
    }

    pub(crate) fn parse_line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { location: Location::Line(line), message: message.into() }
    }
}
