//! Classification of adjacency pairs.
//!
//! A pair is good when, around any point `r`, the background
//! neighborhood `beta(r)` is a digital manifold of codimension 1 under
//! the pair and contains no double points. Cubical pairs are translation
//! invariant, so the origin decides for every point; the Khalimsky
//! relation is only invariant under even translations, so all parity
//! representatives in `{0,1}^n` are checked.

use std::fmt;

use crate::adjacency::{AdjacencySpec, PointSet};
use crate::error::Error;
use crate::lattice::{Point, Translation, Window};

use super::{is_digital_manifold, AdjacencyPair, ManifoldFailure};

/// A double point configuration: the turning translation `translation`
/// is simple, carries `point` to its unit-step witness `q` and the
/// second witness `r` to the center `z`, and `q` stays foreground
/// adjacent to `r`. Such a crossing pinches the surface `beta(z)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DoublePointWitness {
    /// The double point itself, a member of `beta(z)`.
    pub point: Point,
    /// Unit-step neighbor of the center, foreground adjacent to `point`.
    pub q: Point,
    /// Member of `beta(z)` one unit step from `point`.
    pub r: Point,
    /// The simple translation with `translation(point) = q` and
    /// `translation(r) = z`.
    pub translation: Translation,
}

/// All double point configurations of `beta(z)` around the center `z`,
/// in lexicographic order of `(point, q)`.
pub fn double_point_witnesses(
    z: &Point,
    pair: &AdjacencyPair,
) -> Result<Vec<DoublePointWitness>, Error> {
    if z.dim() != pair.dim() {
        return Err(Error::DimensionMismatch { expected: pair.dim(), found: z.dim() });
    }
    let proto = AdjacencySpec::proto(pair.dim())?;
    let surface = pair.beta().neighbors(z)?;
    let mut out = Vec::new();
    for p in surface.iter() {
        for q in proto.neighbors_vec(z) {
            if !pair.alpha().adjacent(p, &q) {
                continue;
            }
            let t = Translation::between(p, &q);
            if !t.is_simple() {
                continue;
            }
            let r = z.translated(&t.inverse());
            if !surface.contains(&r) {
                continue;
            }
            if !proto.adjacent(p, &r) {
                continue;
            }
            if !pair.alpha().adjacent(&q, &r) {
                continue;
            }
            out.push(DoublePointWitness { point: *p, q, r, translation: t });
        }
    }
    Ok(out)
}

/// The set of double points of `beta(z)` around `z`.
pub fn double_points(z: &Point, pair: &AdjacencyPair) -> Result<PointSet, Error> {
    let witnesses = double_point_witnesses(z, pair)?;
    PointSet::from_points(pair.dim(), witnesses.into_iter().map(|w| w.point))
}

/// Why a pair is not good: around `reference`, the background
/// neighborhood either fails the manifold axioms or contains a double
/// point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GoodPairFailure {
    Manifold { reference: Point, failure: ManifoldFailure },
    DoublePoint { reference: Point, witness: DoublePointWitness },
}

impl fmt::Display for GoodPairFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodPairFailure::Manifold { reference, failure } => {
                write!(f, "around {reference}: {failure}")
            }
            GoodPairFailure::DoublePoint { reference, witness } => {
                write!(f, "around {reference}: double point at {}", witness.point)
            }
        }
    }
}

/// Outcome of the good-pair check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GoodPairVerdict {
    failure: Option<GoodPairFailure>,
}

impl GoodPairVerdict {
    pub fn is_good(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failure(&self) -> Option<&GoodPairFailure> {
        self.failure.as_ref()
    }

    pub fn into_failure(self) -> Option<GoodPairFailure> {
        self.failure
    }
}

/// The centers the good-pair check must examine: the origin when both
/// relations are translation invariant, otherwise one representative of
/// every coordinate parity class.
pub fn reference_points(pair: &AdjacencyPair) -> Vec<Point> {
    let n = pair.dim();
    let invariant =
        pair.alpha().cubical_rank().is_some() && pair.beta().cubical_rank().is_some();
    if invariant {
        return vec![Point::origin(n)];
    }
    let corner = Window::around(Point::origin(n), 1).hi();
    Window::new(Point::origin(n), corner)
        .expect("corner box at the origin")
        .points()
        .collect()
}

/// Decides whether the pair is good. For every reference center `r`,
/// the set `beta(r)` must be a digital manifold under the pair (checked
/// in the window that exactly covers its dilated bounding box) and must
/// contain no double points.
pub fn is_good_pair(pair: &AdjacencyPair) -> Result<GoodPairVerdict, Error> {
    let n = pair.dim();
    if n < 2 {
        return Err(Error::DimensionTooSmall { dim: n, min: 2 });
    }
    for r in reference_points(pair) {
        let surface = pair.beta().neighbors(&r)?;
        let window = Window::around(r, 2);
        let manifold = is_digital_manifold(&surface, pair, &window)?;
        if let Some(failure) = manifold.into_failure() {
            return Ok(GoodPairVerdict {
                failure: Some(GoodPairFailure::Manifold { reference: r, failure }),
            });
        }
        let mut witnesses = double_point_witnesses(&r, pair)?;
        if !witnesses.is_empty() {
            return Ok(GoodPairVerdict {
                failure: Some(GoodPairFailure::DoublePoint {
                    reference: r,
                    witness: witnesses.remove(0),
                }),
            });
        }
    }
    Ok(GoodPairVerdict { failure: None })
}

/// Good-pair verdicts for every cubical pair of one dimension.
#[derive(Clone, Debug)]
pub struct GoodPairTable {
    dim: usize,
    cells: Vec<((usize, usize), GoodPairVerdict)>,
}

impl GoodPairTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// All cells in row-major `(foreground rank, background rank)` order.
    pub fn cells(&self) -> &[((usize, usize), GoodPairVerdict)] {
        &self.cells
    }

    pub fn verdict(&self, l: usize, k: usize) -> Option<&GoodPairVerdict> {
        self.cells
            .iter()
            .find(|((fl, fk), _)| *fl == l && *fk == k)
            .map(|(_, v)| v)
    }

    /// The `(l, k)` ranks of the good pairs, in table order.
    pub fn good_pairs(&self) -> Vec<(usize, usize)> {
        self.cells
            .iter()
            .filter(|(_, v)| v.is_good())
            .map(|(lk, _)| *lk)
            .collect()
    }
}

/// Maximum table dimension without and with the slow opt-in.
pub const TABLE_DIM_LIMIT: usize = 4;
pub const TABLE_DIM_LIMIT_SLOW: usize = 5;

/// Classifies all cubical pairs `(l, k)` of the given dimension. The
/// exhaustive manifold checks grow steeply with the dimension, so 5 is
/// only available behind `allow_slow`.
pub fn good_pair_table(dim: usize, allow_slow: bool) -> Result<GoodPairTable, Error> {
    let max = if allow_slow { TABLE_DIM_LIMIT_SLOW } else { TABLE_DIM_LIMIT };
    if !(2..=max).contains(&dim) {
        return Err(Error::TableDimOutOfRange { dim, max });
    }
    let mut cells = Vec::with_capacity(dim * dim);
    for l in 0..dim {
        for k in 0..dim {
            let pair = AdjacencyPair::new(
                AdjacencySpec::cubical(l, dim)?,
                AdjacencySpec::cubical(k, dim)?,
            )?;
            cells.push(((l, k), is_good_pair(&pair)?));
        }
    }
    Ok(GoodPairTable { dim, cells })
}
