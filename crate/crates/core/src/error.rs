use thiserror::Error;

use crate::report::PropertyReport;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("universe has {expected} labels declared but {found} were given")]
    LabelCount { expected: usize, found: usize },

    #[error("duplicate label {0:?} in universe")]
    DuplicateLabel(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("element {element} is outside a universe of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("universe mismatch: expected size {expected}, found size {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error(
        "{what} needs exhaustive enumeration over n = {n} elements, above the limit of {limit}"
    )]
    Capacity {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("relation is not an equivalence relation: it is not {property}")]
    NotEquivalence { property: &'static str },

    #[error("family is not a matroid: {}", .0.first_failure().map(|f| f.to_string()).unwrap_or_default())]
    NotAMatroid(PropertyReport),

    #[error("law {law} violated: {detail}")]
    LawViolation { law: &'static str, detail: String },

    #[error("unknown law id {0:?}")]
    UnknownLaw(String),

    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
