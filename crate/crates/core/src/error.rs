//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the library surface.
///
/// Input problems (bad files, inconsistent profiles, non-manifold complexes)
/// are ordinary variants; [`Error::Internal`] is reserved for broken
/// invariants that indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("boundary composition is nonzero at entry ({row}, {col})")]
    CompositionNonzero { row: usize, col: usize },

    #[error("matrix shapes are incompatible: {left_rows}x{left_cols} followed by {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("degree {degree} is out of range for a complex of dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("coefficient tags do not match: expected {expected}, got {got}")]
    CoefficientMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("cochain of degree {degree} is not a cocycle")]
    NotACocycle { degree: usize },

    #[error("cochains live on different complexes ({left} vs {right} simplices in degree {degree})")]
    ComplexMismatch {
        degree: usize,
        left: usize,
        right: usize,
    },

    #[error("cup-{i} product is undefined for degrees {p} and {q}")]
    IndexOutOfRange { i: usize, p: usize, q: usize },

    #[error("the Sq^2 injectivity criterion applies only in dimension <= 7, got {dim}")]
    DimensionTooLarge { dim: usize },

    #[error("complex is not pure: facets of dimensions {a} and {b} both present")]
    NotPure { a: usize, b: usize },

    #[error("complex is not a closed pseudomanifold")]
    NotClosed,

    #[error("dimension mismatch: {a} vs {b}")]
    DimensionMismatch { a: usize, b: usize },

    #[error("homology profile inconsistent: {reason}")]
    ProfileInconsistent { reason: String },

    #[error("not a closed connected manifold: failed check `{check}`")]
    NotAClosedManifold { check: &'static str },

    #[error("a polygon needs at least 3 vertices, got {m}")]
    MTooSmall { m: usize },

    #[error("unknown corpus entry `{name}`")]
    UnknownEntry { name: String },

    #[error("invalid facet: {reason}")]
    InvalidFacet { reason: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex map is not simplicial on simplex {simplex:?}")]
    NotSimplicialMap { simplex: Vec<usize> },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
