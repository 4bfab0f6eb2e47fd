use thiserror::Error;

use crate::report::ValidationReport;

/// Errors raised while building or transforming finite structures.
///
/// Structural problems (dangling names, missing table entries, capacity) are
/// kept apart from law violations, which carry a full [`ValidationReport`].
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Structural(String),
    #[error("{what} violates its laws:\n{report}")]
    Laws {
        what: String,
        report: ValidationReport,
    },
    #[error("capacity exceeded: {what} would exceed {limit}")]
    Capacity { what: String, limit: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn unknown(kind: &'static str, name: impl Into<String>) -> Self {
        Error::Unknown {
            kind,
            name: name.into(),
        }
    }

    pub(crate) fn duplicate(kind: &'static str, name: impl Into<String>) -> Self {
        Error::Duplicate {
            kind,
            name: name.into(),
        }
    }
}
