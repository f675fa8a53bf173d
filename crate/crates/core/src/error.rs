use thiserror::Error;

/// Errors shared across the crate.
///
/// Operations with mathematical preconditions report the first violated
/// hypothesis together with a witness tuple, so callers can sort inputs into
/// hypothesis classes instead of guessing from a message string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("table order must be at least 1")]
    EmptyTable,

    #[error("entry {value} at row {row}, column {col} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("not associative: ({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}")]
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
        left: usize,
        right: usize,
    },

    #[error("{op} supports order at most {max}, got {order}")]
    OrderTooLarge {
        op: &'static str,
        order: usize,
        max: usize,
    },

    #[error("element {element} is outside the carrier 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("element {element} is not idempotent")]
    NotIdempotent { element: usize },

    #[error("hypothesis \"{name}\" fails, witness {witness:?}")]
    Hypothesis {
        name: &'static str,
        witness: Vec<usize>,
    },

    /// A statement this crate verifies extensionally came out false where its
    /// hypotheses held. Seeing this variant means a bug, not a user error.
    #[error("verified statement \"{name}\" fails, witness {witness:?}")]
    Conclusion {
        name: &'static str,
        witness: Vec<usize>,
    },

    #[error("unknown suite \"{0}\"")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
