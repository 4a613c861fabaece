//! Error types shared across the crate.

use thiserror::Error;

/// Rejection reasons for group construction and subgroup operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be at least 1")]
    InvalidOrder,
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry [{row}][{col}] = {value} is out of range 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not a group: row {row} repeats value {value}")]
    RowRepeats { row: usize, value: usize },
    #[error("not a group: column {col} repeats value {value}")]
    ColRepeats { col: usize, value: usize },
    #[error("identity is not at index 0: table[0][{witness}] or [{witness}][0] differs from {witness}")]
    IdentityNotFirst { witness: usize },
    #[error("not a group: element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("not a group: associativity fails at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element labels are not distinct: {label:?}")]
    DuplicateLabel { label: String },
    #[error("label count {labels} does not match table order {order}")]
    LabelCountMismatch { labels: usize, order: usize },
    #[error("element index {index} out of range 0..{order}")]
    OutOfRange { index: usize, order: usize },
    #[error("set {{..{witness}..}} is not a subgroup: not closed under product or inverse")]
    NotASubgroup { witness: usize },
}

/// Structural rejection reasons for carrier sets, partial actions and
/// global actions. Semantic (axiom-level) problems are reported through
/// [`crate::ValidationReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("carrier labels are not distinct: {label:?}")]
    DuplicateLabel { label: String },
    #[error("expected one entry per group element ({expected}), got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("carrier index {index} out of range 0..{size}")]
    CarrierOutOfRange { index: usize, size: usize },
    #[error("group element index {index} out of range 0..{order}")]
    GroupOutOfRange { index: usize, order: usize },
    #[error("domain of {element} lists carrier index {index} twice")]
    DuplicateDomainEntry { element: String, index: usize },
    #[error("subset lists index {index} twice")]
    DuplicateSubsetEntry { index: usize },
    #[error("permutation for {element} is not a bijection: value {value} repeats")]
    NotAPermutation { element: String, value: usize },
}

/// Top-level error for the crate's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Action(#[from] ActionError),
    /// A derived law that must hold for every valid input failed. Seeing
    /// this on validated data indicates a bug, not a bad input.
    #[error("consistency check `{check}` failed at {witness}")]
    Consistency { check: &'static str, witness: String },
    #[error("global action is invalid: {detail}")]
    InvalidGlobalAction { detail: String },
    #[error("size cap exceeded: construction needs {required} cells, cap is {cap}")]
    SizeCap { required: usize, cap: usize },
    #[error("incompatible argument: {0}")]
    Argument(String),
}

impl Error {
    pub(crate) fn consistency(check: &'static str, witness: impl Into<String>) -> Self {
        Error::Consistency { check, witness: witness.into() }
    }
}
