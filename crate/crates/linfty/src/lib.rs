//! Exact geometry of `(R^n, d_inf)`: the max (Chebyshev) metric.
//!
//! The crate answers two families of questions, all in exact rational
//! arithmetic:
//!
//! * **Geodesics.** Which polyline paths are geodesics of the max metric?
//!   Between which point pairs is the geodesic unique? ([`sector`],
//!   [`metric`])
//! * **Planes.** Which planes of `R^3` with the max metric are isometric to
//!   the max-metric plane `R^2`, and when are two planes isometric to each
//!   other? ([`plane`], [`isometry`])
//!
//! The second family is settled by cutting the unit cube with the plane: the
//! cross-section is a tetragon exactly when the plane is flat (isometric to
//! `R^2`), a hexagon otherwise, and the similarity class of the triangle with
//! sides `|a|, |b|, |c|` is a complete isometry invariant.
//!
//! Everything in the core is a pure function over immutable values; floats
//! appear only in SVG output. The [`oracle`] module holds deliberately naive
//! brute-force validators used by the test suite.
//!
//! See the crate `examples/` directory for one runnable program per major
//! capability, and the `linfty` binary for a JSON-emitting command line.

pub mod cli;
pub mod isometry;
pub mod metric;
pub mod oracle;
pub mod plane;
pub mod sector;
pub mod svg;

pub use isometry::{CanonicalClass, PlaneOrbit, SignedPermutation};
pub use metric::{chebyshev_distance, polyline_length, segment, PointN, Polyline, Scalar};
pub use plane::{FlatChart, Plane, SectionPolygon, SectionShape};
pub use sector::{GeodesicCount, Sector, SectorSignature, Sign, SphereSpec};

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("dimension must be exactly {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("dimension {0} too large for this operation")]
    DimensionTooLarge(usize),
    #[error("polyline needs at least 2 vertices")]
    TooFewVertices,
    #[error("consecutive duplicate vertex at index {0}")]
    DuplicateVertex(usize),
    #[error("points must be distinct")]
    IdenticalPoints,
    #[error("sector axis {axis} out of bounds for dimension {dim}")]
    AxisOutOfBounds { axis: usize, dim: usize },
    #[error("radius must be strictly positive")]
    NonPositiveRadius,
    #[error("normal vector must be nonzero")]
    ZeroNormal,
    #[error("plane must pass through the origin (d = 0)")]
    NonzeroOffset,
    #[error("the geodesic between these points is unique")]
    UniqueGeodesic,
    #[error("plane passes the triangle test, no flat chart exists")]
    NotFlat,
    #[error("point does not lie on the plane")]
    PointNotOnPlane,
    #[error("chart does not parametrize this plane")]
    ChartPlaneMismatch,
    #[error("invalid permutation {0:?}")]
    InvalidPermutation([usize; 3]),
    #[error("cannot parse {0:?} as a rational number")]
    ParseScalar(String),
    #[error("cross-section is degenerate (this should be impossible)")]
    DegenerateSection,
}

pub type Result<T> = std::result::Result<T, Error>;
