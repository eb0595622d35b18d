use thiserror::Error;

use crate::scalar::{Characteristic, Scalar};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not allowed (must be 0 or an odd prime below 2^31)")]
    InvalidCharacteristic(u64),

    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(Characteristic, Characteristic),

    #[error("cannot parse scalar {text:?}: {reason}")]
    ParseScalar { text: String, reason: String },

    #[error("denominator vanishes in characteristic {0}")]
    ZeroDenominator(Characteristic),

    /// A structure-constant table violates a type invariant; the message names it.
    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("elements belong to different algebras")]
    MismatchedParents,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("element must be even")]
    NotEven,

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    /// `product` is the coordinate vector (in the parent algebra) of the
    /// product of reduced basis vectors `left` and `right` that escapes the span.
    #[error("span is not closed under multiplication: product of basis vectors {left} and {right} escapes")]
    NotClosed { left: usize, right: usize, product: Vec<Scalar> },

    #[error("not an idempotent: e*e != e")]
    NotIdempotent,

    #[error("eigenspaces do not exhaust the algebra ({found} of {dim} dimensions)")]
    EigenspacesIncomplete { found: usize, dim: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid bracket: {0}")]
    InvalidBracket(String),

    #[error("not a superinvolution: {0}")]
    NotSuperinvolution(String),

    #[error("undecided: {0}")]
    Undecided(String),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}
