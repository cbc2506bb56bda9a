//! Cell structures for multiset spaces of intervals and rectangles.
//!
//! The space of `n`-element multisets in a compact interval is a metric
//! simplex (an orthoscheme) whose faces are labeled by *linear compositions*
//! of `n`: integer vectors with possibly-zero ends and positive interior,
//! ordered by merging adjacent entries. The space of `n`-element multisets in
//! a closed rectangle carries a bi-simplicial cell structure whose cells are
//! products of two orthoschemes, labeled by *rectangular compositions*:
//! nonnegative integer matrices with no zero internal row or column sums,
//! ordered by merging adjacent rows or columns.
//!
//! This crate builds those posets and the structures around them:
//!
//! - [`symmetry`]: permutations of `[n]`, their matrices, the two actions, and
//!   the left, right, and overlaid Cayley graphs over adjacent transpositions;
//! - [`linear`]: linear compositions, their Boolean-lattice order, multisets
//!   in an interval, the multiplicity map, and orthoscheme spines;
//! - [`rectangular`]: rectangular compositions, the merge order, projections,
//!   multiplicity matrices, preimage counts, and bi-orthoscheme spines;
//! - [`complexes`]: the face poset of the whole multiset space, its dual
//!   graph and the comparison with the overlaid Cayley graphs, the tetrahedral
//!   graph on the vertex set, permutahedra, and geometric realizations;
//! - [`interface`]: JSON and DOT file formats, deterministic exports, random
//!   test inputs, and the bundled verification suite behind the `multisets`
//!   command-line tool.
//!
//! Everything combinatorial is exact (integers and rationals); floating point
//! appears only in geometric realizations, which check their coordinates
//! against declared exact squared lengths.
//!
//! The narrative guide in `book/` walks through the same material chapter by
//! chapter; its code snippets compile and run as doc-tests of [`guide`].

#![forbid(unsafe_code)]

use thiserror::Error as ThisError;

pub mod complexes;
pub mod exact;
pub mod graph;
pub mod guide;
pub mod interface;
pub mod linear;
pub mod rectangular;
pub mod symmetry;

pub use complexes::{
    dual_graph, face_poset_rect, permutahedron, realize_biorthoscheme, tetra_graph,
    verify_dual_graph, FacePoset, GeometricRealization, Permutahedron, TetraGraph,
};
pub use exact::Rat;
pub use graph::{Color, EdgeTag, LabeledMultigraph, Side};
pub use linear::{enumerate_linear, CutSet, LinearComposition, LinearSpine, Multiset1D};
pub use rectangular::{
    count_preimages, enumerate_rect, maximal_elements, minimal_elements, Multiset2D, Rect,
    RectComposition, SpineComplex,
};
pub use symmetry::{cayley_graph, overlay_lr, CayleySide, Permutation, PermutationMatrix};

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong constructing or combining the exact objects
/// in this crate. Input-shaped failures name the first violated rule.
#[derive(ThisError, Clone, PartialEq, Debug)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("not a rational: {0:?}")]
    BadRational(String),
    #[error("duplicate vertex key")]
    DuplicateVertex,
    #[error("edge endpoint {0:?} is not a listed vertex")]
    UnknownVertex(String),
    #[error("permutations are defined on [n] with n >= 1")]
    EmptyPermutation,
    #[error("value {value} breaks the bijection on [{n}]")]
    NotABijection { value: usize, n: usize },
    #[error("cycles overlap at {value}")]
    OverlappingCycles { value: usize },
    #[error("unreadable cycle notation: {0:?}")]
    BadCycleNotation(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("composition needs at least 2 entries, got {len}")]
    CompositionTooShort { len: usize },
    #[error("negative entry at position {position}")]
    NegativeEntry { position: usize },
    #[error("internal entry at position {position} is zero")]
    ZeroInternalEntry { position: usize },
    #[error("entries sum to zero; compositions need n >= 1")]
    ZeroTotal,
    #[error("expected entry sum {expected}, got {actual}")]
    SumMismatch { expected: u64, actual: u64 },
    #[error("compositions of different n: {left} vs {right}")]
    MismatchedN { left: u64, right: u64 },
    #[error("cut sets must be nonempty")]
    EmptyCutSet,
    #[error("cut {cut} exceeds n = {n}")]
    CutOutOfRange { cut: u64, n: u64 },
    #[error("interval or rectangle side has nonpositive length")]
    DegenerateInterval,
    #[error("multisets need at least one point")]
    EmptyMultiset,
    #[error("multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("point lies outside the domain")]
    PointOutsideDomain,
    #[error("matrix shape {rows}x{cols} is too small; compositions need at least 2x2")]
    BadShape { rows: usize, cols: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("negative entry at row {row}, column {col}")]
    NegativeMatrixEntry { row: usize, col: usize },
    #[error("internal row {row} sums to zero")]
    ZeroInternalRow { row: usize },
    #[error("internal column {col} sums to zero")]
    ZeroInternalCol { col: usize },
    #[error("basepoint coordinates must be strictly increasing")]
    NonGenericBasepoint,
    #[error("declared squared lengths disagree with coordinates: error {error:.3e} > {tol:.3e}")]
    GeometryMismatch { error: f64, tol: f64 },
    #[error("{task} is bounded at n <= {max}, refused for n = {requested}")]
    ResourceGuard {
        task: &'static str,
        requested: u64,
        max: u64,
    },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("i/o: {0}")]
    Io(String),
}
