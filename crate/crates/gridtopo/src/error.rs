use std::fmt;

use crate::lattice::{Point, Window, MAX_DIM};

/// Everything that can go wrong when building or querying lattice structures.
///
/// Variants carry the offending values so callers can report them verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A coordinate vector had length 0 or more than [`MAX_DIM`].
    DimensionOutOfRange { dim: usize },
    /// Two objects that must live in the same ambient dimension do not.
    DimensionMismatch { expected: usize, found: usize },
    /// An operation is only defined from this ambient dimension upwards.
    DimensionTooSmall { dim: usize, min: usize },
    /// An axis index was not below the ambient dimension.
    AxisOutOfRange { axis: usize, dim: usize },
    /// The same axis was listed twice for a cube.
    DuplicateAxis { axis: usize },
    /// A window corner pair with `lo > hi` on some axis.
    InvalidWindow { axis: usize, lo: i32, hi: i32 },
    /// Requested subcube rank `j` exceeds the cube rank `k`.
    SubcubeRankOutOfRange { rank: usize, cube_rank: usize },
    /// Corner decompositions exist only for cubes of rank at least 2.
    CubeRankTooSmall { cube_rank: usize },
    /// Requested cube rank exceeds the window's ambient dimension.
    CubeRankOutOfRange { rank: usize, dim: usize },
    /// Face-count arguments outside `0 <= k <= n <= MAX_DIM`.
    FaceArgsOutOfRange { n: usize, k: usize },
    /// Cubical adjacency rank outside `0 ..= n-1`.
    InvalidCubicalRank { rank: usize, dim: usize },
    /// The Khalimsky relation has no uniform per-point neighbor count.
    NoUniformNeighborCount,
    /// A point expected inside a window was not.
    PointOutsideWindow { point: Point, window: Window },
    /// A point expected to be a member of a set was not.
    PointNotInSet { point: Point },
    /// The window does not cover the set's bounding box dilated by 1,
    /// which the exhaustive checkers need for an exact verdict.
    WindowTooSmall { required: Window, window: Window },
    /// A query about a point that is not an element of the space.
    UnknownElement { point: Point },
    /// A minimal neighborhood did not contain its own point.
    NeighborhoodMissingSelf { point: Point },
    /// A listed neighborhood member is not an element of the space.
    NeighborhoodForeignMember { point: Point, member: Point },
    /// `q` lies in the minimal neighborhood of `p`, but the minimal
    /// neighborhood of `q` is not contained in that of `p`.
    NeighborhoodNotNested { point: Point, member: Point },
    /// Two distinct elements with identical minimal neighborhoods.
    NotT0 { first: Point, second: Point },
    /// The punctured neighborhood of a point split into `count` pieces
    /// instead of the required two.
    WrongComponentCount { point: Point, count: usize },
    /// Pair-table dimension outside the supported range.
    TableDimOutOfRange { dim: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionOutOfRange { dim } => {
                write!(f, "ambient dimension {dim} not in 1..={MAX_DIM}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::DimensionTooSmall { dim, min } => {
                write!(f, "operation needs ambient dimension >= {min}, got {dim}")
            }
            Error::AxisOutOfRange { axis, dim } => {
                write!(f, "axis {axis} out of range for dimension {dim}")
            }
            Error::DuplicateAxis { axis } => write!(f, "axis {axis} listed twice"),
            Error::InvalidWindow { axis, lo, hi } => {
                write!(f, "window corner order violated on axis {axis}: {lo} > {hi}")
            }
            Error::SubcubeRankOutOfRange { rank, cube_rank } => {
                write!(f, "subcube rank {rank} exceeds cube rank {cube_rank}")
            }
            Error::CubeRankTooSmall { cube_rank } => {
                write!(f, "corner decompositions need rank >= 2, cube has rank {cube_rank}")
            }
            Error::CubeRankOutOfRange { rank, dim } => {
                write!(f, "cube rank {rank} out of range for dimension {dim}")
            }
            Error::FaceArgsOutOfRange { n, k } => {
                write!(f, "face count arguments out of range: n={n}, k={k}")
            }
            Error::InvalidCubicalRank { rank, dim } => {
                write!(f, "cubical rank {rank} not in 0..={} for dimension {dim}", dim - 1)
            }
            Error::NoUniformNeighborCount => {
                write!(f, "the Khalimsky relation has no uniform neighbor count")
            }
            Error::PointOutsideWindow { point, window } => {
                write!(f, "point {point} outside window {window}")
            }
            Error::PointNotInSet { point } => write!(f, "point {point} is not in the set"),
            Error::WindowTooSmall { required, window } => {
                write!(f, "window {window} too small, need at least {required}")
            }
            Error::UnknownElement { point } => {
                write!(f, "point {point} is not an element of the space")
            }
            Error::NeighborhoodMissingSelf { point } => {
                write!(f, "minimal neighborhood of {point} does not contain the point itself")
            }
            Error::NeighborhoodForeignMember { point, member } => {
                write!(f, "neighborhood of {point} lists {member}, which is not in the space")
            }
            Error::NeighborhoodNotNested { point, member } => {
                write!(
                    f,
                    "neighborhood of {member} is not contained in the neighborhood of {point}"
                )
            }
            Error::NotT0 { first, second } => {
                write!(f, "distinct points {first} and {second} share a minimal neighborhood")
            }
            Error::WrongComponentCount { point, count } => {
                write!(f, "punctured neighborhood of {point} has {count} components, not 2")
            }
            Error::TableDimOutOfRange { dim, max } => {
                write!(f, "pair table dimension {dim} not in 2..={max}")
            }
        }
    }
}

impl std::error::Error for Error {}
