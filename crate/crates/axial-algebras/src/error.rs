//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Verdicts that are data (a fusion violation, a failed Fischer check, a
/// central automorphism that does not exist) are *not* errors; they are
/// returned inside the corresponding report types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("cannot parse scalar {text:?}: {reason}")]
    ParseError { text: String, reason: String },
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix is not symmetric (entry ({0},{1}))")]
    NotSymmetric(usize, usize),
    #[error("operation requires an ordered field; unsupported over {0}")]
    UnsupportedField(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("subspace is not an ideal (basis row {row} times basis vector {col} escapes)")]
    NotAnIdeal { row: usize, col: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("adjoint is not semisimple on the given eigenvalues: eigenspace dims sum to {found} < {expected}; minimal polynomial {min_poly}")]
    NotSemisimple {
        expected: usize,
        found: usize,
        min_poly: String,
    },
    #[error("eigenspace sign map is not an automorphism: fails on basis pair ({0},{1})")]
    NotAnAutomorphism(usize, usize),

    #[error("eta must avoid 0 and 1, got {0}")]
    BadEta(String),
    #[error("the two elements do not form a Jordan pair: {0}")]
    NotJordanPair(String),
    #[error("pair classification cross-check failed: {0}")]
    UnclassifiedPair(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("line {0:?} does not have three distinct points")]
    BadLineSize(Vec<String>),
    #[error("duplicate line {0:?}")]
    DuplicateLine(Vec<String>),
    #[error("points {0:?} and {1:?} lie on two distinct lines")]
    PairOnTwoLines(String, String),
    #[error("unknown point label {0:?}")]
    UnknownPoint(String),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("set is not a set of 3-transpositions")]
    Not3Transpositions,
    #[error("axis list is not invariant under its Miyamoto maps (image of axis {0} missing)")]
    ClosureNotInvariant(usize),
    #[error("radical of the form is not an ideal; the form is inconsistent")]
    RadicalNotIdeal,
    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),

    #[error("malformed file: {0}")]
    FileFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
