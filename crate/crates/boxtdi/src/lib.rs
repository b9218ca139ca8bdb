//! Exact rational toolkit for certifying box-integrality properties of
//! rational polyhedra.
//!
//! The central question answered by this crate: given a polyhedron
//! `P = {x : Ax <= b}` with rational data, is `P` box-TDI (equivalently,
//! principally box-integer)? The decision runs entirely in exact rational
//! arithmetic and produces machine-checkable certificates in both
//! directions: totally unimodular face-defining matrices per face on
//! acceptance, or a nonequimodular face-defining matrix with two maximal
//! minors of different absolute values on refutation, together with a
//! self-validating fractional vertex of a dilated, box-intersected copy
//! of `P`.
//!
//! Module map:
//! - [`rat`]: arbitrary-precision rational scalars and extended integers.
//! - [`matrix`]: dense exact matrices and vectors.
//! - [`linalg`]: determinants, rank, solving, kernels, Hermite normal
//!   form, lattice membership and equality.
//! - [`matprops`]: recognizers for unimodular, equimodular, totally
//!   unimodular, and totally equimodular matrices, with witnesses.
//! - [`polyhedra`]: H/V representations, double-description conversion,
//!   faces and face-defining matrices, cones, polarity, dilation.
//! - [`certify`]: the decision procedures (box-integer, box-TDI,
//!   fully-box-integer, cone polarity, Cook box property, dilation
//!   profiles, fractional-vertex witness extraction).
//! - [`instances`]: structured instance families (clutters, covering
//!   polyhedra, stable set polytopes, circuit and conservative-function
//!   cones) plus a catalog of named examples.
//! - [`io`]: text and JSON file formats shared with the CLI.
//!
//! All operations are pure functions on immutable values; nothing in the
//! crate holds shared mutable state.

pub mod certify;
pub mod instances;
pub mod io;
pub mod linalg;
pub mod matprops;
pub mod matrix;
pub mod polyhedra;
pub mod rat;

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Square input required (determinants and friends).
    NonSquare { rows: usize, cols: usize },
    /// Incompatible dimensions between operands.
    DimensionMismatch(String),
    /// Full row rank was required but not present.
    RankDeficient { expected: usize, found: usize },
    /// Integer entries were required.
    NonIntegerMatrix,
    /// Operation requires a nonempty polyhedron.
    EmptyPolyhedron,
    /// Operation requires a cone, i.e. right-hand side zero.
    NonZeroRhs,
    /// Dilation factor must be positive.
    NonPositiveDilation,
    /// Box bounds cross: lower > upper in some coordinate.
    CrossedBounds { index: usize },
    /// Element outside a clutter's ground set or a graph's vertex range.
    InvalidElement { element: usize, bound: usize },
    /// A clutter member contained in another (antichain violated).
    ClutterContainment { inner: usize, outer: usize },
    /// Vertex-unfolding precondition violated by an edge.
    UnfoldPrecondition { u: usize, v: usize, reason: &'static str },
    /// An exhaustive search exceeded its configured budget.
    SearchBudgetExceeded(String),
    /// A produced witness failed its own validation.
    WitnessValidationFailed(String),
    /// Malformed input file.
    Parse { line: usize, col: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::RankDeficient { expected, found } => {
                write!(f, "full row rank required: expected rank {expected}, found {found}")
            }
            Error::NonIntegerMatrix => write!(f, "integer entries required"),
            Error::EmptyPolyhedron => write!(f, "operation requires a nonempty polyhedron"),
            Error::NonZeroRhs => write!(f, "operation requires a cone (right-hand side zero)"),
            Error::NonPositiveDilation => write!(f, "dilation factor must be positive"),
            Error::CrossedBounds { index } => {
                write!(f, "crossed box bounds at coordinate {index}")
            }
            Error::InvalidElement { element, bound } => {
                write!(f, "element {element} outside range 0..{bound}")
            }
            Error::ClutterContainment { inner, outer } => {
                write!(f, "clutter member {inner} is contained in member {outer}")
            }
            Error::UnfoldPrecondition { u, v, reason } => {
                write!(f, "unfold precondition violated by ({u},{v}): {reason}")
            }
            Error::SearchBudgetExceeded(msg) => write!(f, "search budget exceeded: {msg}"),
            Error::WitnessValidationFailed(msg) => write!(f, "witness validation failed: {msg}"),
            Error::Parse { line, col, msg } => write!(f, "parse error at {line}:{col}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
