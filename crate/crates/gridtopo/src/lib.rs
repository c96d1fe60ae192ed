//! Digital topology on the integer lattice.
//!
//! The crate models finite point sets in `Z^n` for `n <= 6` together
//! with the standard adjacency relations (unit-step, full ball, the
//! cubical family between them, and the Khalimsky relation), connected
//! component partitions of sets and their complements, the axioms for
//! digital manifolds of codimension 1, the classification of good
//! adjacency pairs, and finite Alexandrov spaces with their dimension
//! and surface recursions.
//!
//! All iteration orders are deterministic: point sets are ordered
//! lexicographically and component partitions by their smallest member.

#![forbid(unsafe_code)]

pub mod adjacency;
pub mod alexandrov;
mod error;
pub mod lattice;
pub mod manifold;

pub use adjacency::{
    complement_components, components, khalimsky_below, AdjacencyKind, AdjacencySpec,
    ComponentPartition, PointSet,
};
pub use alexandrov::{khalimsky_space_on, FiniteAlexandrovSpace};
pub use error::Error;
pub use lattice::{
    count_k_faces, Cube, CubeDecomposition, Point, Translation, Window, MAX_DIM,
};
pub use manifold::{
    check_separation_property, double_point_witnesses, double_points, good_pair_table,
    is_digital_manifold, is_good_pair, jordan_check, reference_points, two_components_at,
    AdjacencyPair, DoublePointWitness, GoodPairFailure, GoodPairTable, GoodPairVerdict,
    JordanReport, ManifoldFailure, ManifoldVerdict, SeparationVerdict, SeparationWitness,
};
