//! Digital manifold axioms, the separation law and good adjacency pairs.
//!
//! A pair assigns one relation to a set `m` (the foreground) and one to
//! its complement (the background). `m` is a digital surface, a manifold
//! of codimension 1, when four axioms hold on an `alpha`-connected `m`:
//!
//! 1. every full-dimensional unit cube meets `m` in an `alpha`-connected
//!    set,
//! 2. the punctured Chebyshev ball of every `p` in `m` splits into
//!    exactly two background components,
//! 3. every foreground neighbor of `p` touches both of those components,
//! 4. the corner-separation law of [`check_separation_property`].
//!
//! All checks are exhaustive over a finite window, which must cover the
//! bounding box of `m` dilated by 1; cubes and neighborhoods of points
//! of `m` never reach further, so enlarging the window cannot change a
//! verdict.

mod good_pairs;
mod separation;

pub use good_pairs::{
    double_point_witnesses, double_points, good_pair_table, is_good_pair, reference_points,
    DoublePointWitness, GoodPairFailure, GoodPairTable, GoodPairVerdict,
};
pub use separation::{check_separation_property, SeparationVerdict, SeparationWitness};

use std::fmt;

use crate::adjacency::{components, AdjacencySpec, PointSet};
use crate::error::Error;
use crate::lattice::{Cube, Point, Window};

/// Foreground and background relation, fixed to one dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AdjacencyPair {
    alpha: AdjacencySpec,
    beta: AdjacencySpec,
}

impl AdjacencyPair {
    /// Pairs two relations of the same dimension. Every supported
    /// relation sits between the unit-step relation and the full
    /// Chebyshev ball; the debug build re-verifies that on the parity
    /// representatives.
    pub fn new(alpha: AdjacencySpec, beta: AdjacencySpec) -> Result<Self, Error> {
        if alpha.dim() != beta.dim() {
            return Err(Error::DimensionMismatch {
                expected: alpha.dim(),
                found: beta.dim(),
            });
        }
        #[cfg(debug_assertions)]
        {
            let n = alpha.dim();
            let proto = AdjacencySpec::proto(n).expect("dimension already validated");
            let parity_box =
                Window::new(Point::origin(n), Window::around(Point::origin(n), 1).hi())
                    .expect("corner box at the origin");
            for rep in parity_box.points() {
                for a in [&alpha, &beta] {
                    let nbrs = a.neighbors(&rep).expect("dimensions match");
                    for q in proto.neighbors_vec(&rep) {
                        debug_assert!(nbrs.contains(&q), "{a} drops a unit step at {rep}");
                    }
                    for q in nbrs.iter() {
                        debug_assert!(rep.linf_distance(q) == 1, "{a} leaves the ball at {rep}");
                    }
                }
            }
        }
        Ok(AdjacencyPair { alpha, beta })
    }

    pub fn alpha(&self) -> &AdjacencySpec {
        &self.alpha
    }

    pub fn beta(&self) -> &AdjacencySpec {
        &self.beta
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }
}

impl fmt::Display for AdjacencyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

/// Why a set failed the manifold check. The connectivity requirement on
/// `m` itself is a precondition of the definition, not one of the four
/// axioms; `axiom()` returns `None` for it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ManifoldFailure {
    /// `m` is not `alpha`-connected.
    NotAlphaConnected { component_count: usize },
    /// Axiom 1: this full cube meets `m` in a disconnected set.
    CubeDisconnected { cube: Cube, component_count: usize },
    /// Axiom 2: the punctured ball of `point` has the wrong number of
    /// background components.
    ComplementSplit { point: Point, component_count: usize },
    /// Axiom 3: `neighbor` (a foreground neighbor of `point`) touches no
    /// point of `block`, one of the two background components at `point`.
    BackgroundContact { point: Point, neighbor: Point, block: PointSet },
    /// Axiom 4: the separation law fails with this witness.
    Separation(SeparationWitness),
}

impl ManifoldFailure {
    /// The violated axiom's number, or `None` for the connectivity
    /// precondition.
    pub fn axiom(&self) -> Option<u8> {
        match self {
            ManifoldFailure::NotAlphaConnected { .. } => None,
            ManifoldFailure::CubeDisconnected { .. } => Some(1),
            ManifoldFailure::ComplementSplit { .. } => Some(2),
            ManifoldFailure::BackgroundContact { .. } => Some(3),
            ManifoldFailure::Separation(_) => Some(4),
        }
    }
}

impl fmt::Display for ManifoldFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldFailure::NotAlphaConnected { component_count } => {
                write!(f, "the set splits into {component_count} foreground components")
            }
            ManifoldFailure::CubeDisconnected { cube, component_count } => {
                write!(f, "{cube} meets the set in {component_count} pieces")
            }
            ManifoldFailure::ComplementSplit { point, component_count } => {
                write!(
                    f,
                    "background component count at {point} is {component_count}, expected 2"
                )
            }
            ManifoldFailure::BackgroundContact { point, neighbor, .. } => {
                write!(
                    f,
                    "{neighbor}, a foreground neighbor of {point}, misses one background side"
                )
            }
            ManifoldFailure::Separation(w) => write!(f, "separation law fails at {}", w.cube),
        }
    }
}

/// Outcome of the manifold check. At most one failure is reported: the
/// first one found, with the precondition and axioms tried in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ManifoldVerdict {
    failure: Option<ManifoldFailure>,
}

impl ManifoldVerdict {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&ManifoldFailure> {
        self.failure.as_ref()
    }

    pub fn into_failure(self) -> Option<ManifoldFailure> {
        self.failure
    }
}

pub(crate) fn validate_window(m: &PointSet, w: &Window) -> Result<(), Error> {
    if w.dim() != m.dim() {
        return Err(Error::DimensionMismatch { expected: m.dim(), found: w.dim() });
    }
    for p in m.iter() {
        if !w.contains(p) {
            return Err(Error::PointOutsideWindow { point: *p, window: *w });
        }
    }
    if let Some(bbox) = m.bounding_window() {
        let required = bbox.dilated(1);
        if !w.contains_window(&required) {
            return Err(Error::WindowTooSmall { required, window: *w });
        }
    }
    Ok(())
}

/// The two background components of the punctured Chebyshev ball of `p`,
/// ordered by smallest member. Any other count is reported through
/// [`Error::WrongComponentCount`] so the caller sees the actual number.
pub fn two_components_at(
    p: &Point,
    m: &PointSet,
    beta: &AdjacencySpec,
) -> Result<(PointSet, PointSet), Error> {
    if m.dim() != beta.dim() {
        return Err(Error::DimensionMismatch { expected: beta.dim(), found: m.dim() });
    }
    if p.dim() != beta.dim() {
        return Err(Error::DimensionMismatch { expected: beta.dim(), found: p.dim() });
    }
    if !m.contains(p) {
        return Err(Error::PointNotInSet { point: *p });
    }
    let region = PointSet::from_points(
        m.dim(),
        Window::around(*p, 1).points().filter(|q| !m.contains(q)),
    )?;
    let parts = components(beta, &region)?;
    if parts.len() != 2 {
        return Err(Error::WrongComponentCount { point: *p, count: parts.len() });
    }
    Ok((parts.blocks()[0].clone(), parts.blocks()[1].clone()))
}

/// Checks whether `m` is a digital manifold of codimension 1 under the
/// pair, exhaustively over `w`. The window must contain the bounding box
/// of `m` dilated by 1. The empty set passes vacuously.
pub fn is_digital_manifold(
    m: &PointSet,
    pair: &AdjacencyPair,
    w: &Window,
) -> Result<ManifoldVerdict, Error> {
    let n = pair.dim();
    if n < 2 {
        return Err(Error::DimensionTooSmall { dim: n, min: 2 });
    }
    if m.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.dim() });
    }
    validate_window(m, w)?;

    let fail = |failure| Ok(ManifoldVerdict { failure: Some(failure) });

    let foreground = components(pair.alpha(), m)?;
    if foreground.len() > 1 {
        return fail(ManifoldFailure::NotAlphaConnected {
            component_count: foreground.len(),
        });
    }

    // Axiom 1: full cubes meet m connectedly.
    for cube in w.cubes(n)? {
        let hits =
            PointSet::from_points(n, cube.points().into_iter().filter(|p| m.contains(p)))?;
        if hits.len() < 2 {
            continue;
        }
        let parts = components(pair.alpha(), &hits)?;
        if parts.len() != 1 {
            return fail(ManifoldFailure::CubeDisconnected {
                cube,
                component_count: parts.len(),
            });
        }
    }

    // Axiom 2: two background sides at every point.
    let mut sides: Vec<(Point, PointSet, PointSet)> = Vec::with_capacity(m.len());
    for p in m.iter() {
        match two_components_at(p, m, pair.beta()) {
            Ok((c, d)) => sides.push((*p, c, d)),
            Err(Error::WrongComponentCount { point, count }) => {
                return fail(ManifoldFailure::ComplementSplit {
                    point,
                    component_count: count,
                });
            }
            Err(e) => return Err(e),
        }
    }

    // Axiom 3: foreground neighbors reach both sides.
    for (p, c, d) in &sides {
        for q in pair.alpha().neighbors_vec(p) {
            if !m.contains(&q) {
                continue;
            }
            for block in [c, d] {
                if !block.iter().any(|b| pair.beta().adjacent(&q, b)) {
                    return fail(ManifoldFailure::BackgroundContact {
                        point: *p,
                        neighbor: q,
                        block: block.clone(),
                    });
                }
            }
        }
    }

    // Axiom 4: the separation law.
    let sep = check_separation_property(m, pair, w)?;
    if let Some(witness) = sep.into_witness() {
        return fail(ManifoldFailure::Separation(witness));
    }

    Ok(ManifoldVerdict { failure: None })
}

/// How a candidate curve or surface divides the background: component
/// count and, per foreground point, which components it touches.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JordanReport {
    partition: crate::adjacency::ComponentPartition,
    contacts: Vec<(Point, Vec<bool>)>,
}

impl JordanReport {
    pub fn component_count(&self) -> usize {
        self.partition.len()
    }

    pub fn partition(&self) -> &crate::adjacency::ComponentPartition {
        &self.partition
    }

    /// Per point of `m`: a flag for each background block, in block order.
    pub fn contacts(&self) -> &[(Point, Vec<bool>)] {
        &self.contacts
    }

    pub fn all_points_touch_all_blocks(&self) -> bool {
        self.contacts.iter().all(|(_, touched)| touched.iter().all(|&t| t))
    }

    /// The two-region conclusion: exactly two background components and
    /// every foreground point adjacent to both.
    pub fn two_sided(&self) -> bool {
        self.component_count() == 2 && self.all_points_touch_all_blocks()
    }
}

/// Splits the background of `m` under the pair's background relation and
/// records which components each point of `m` touches. The search window
/// is the bounding box of `m` (dilated internally); an empty `m` yields
/// the single unbounded component.
pub fn jordan_check(m: &PointSet, pair: &AdjacencyPair) -> Result<JordanReport, Error> {
    if m.dim() != pair.dim() {
        return Err(Error::DimensionMismatch { expected: pair.dim(), found: m.dim() });
    }
    let partition = crate::adjacency::complement_components(pair.beta(), m, None)?;
    let mut contacts = Vec::with_capacity(m.len());
    for p in m.iter() {
        let mut touched = vec![false; partition.len()];
        for q in pair.beta().neighbors_vec(p) {
            if let Some(i) = partition.block_containing(&q) {
                touched[i] = true;
            }
        }
        contacts.push((*p, touched));
    }
    Ok(JordanReport { partition, contacts })
}
