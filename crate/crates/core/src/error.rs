use thiserror::Error;

/// Errors shared by group construction, analysis and catalog loading.
#[derive(Debug, Error)]
pub enum Error {
    /// Input data does not describe a valid object (bad permutation, broken
    /// Cayley table, unparseable descriptor or file, out-of-range parameter).
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// An enumeration would exceed the configured order cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// The operation is undefined for this group (e.g. minimal centralizers
    /// of an abelian group).
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// An element of one group was used with a different group.
    #[error("element does not belong to this group")]
    ForeignElement,
}

pub type Result<T> = std::result::Result<T, Error>;
