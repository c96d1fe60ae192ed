//! Adjacency relations on the lattice and connectivity under them.
//!
//! Four families are supported. With `n` the ambient dimension and
//! `0 <= k <= n-1`, the cubical relation of rank `k` links `p` and `q`
//! when their Chebyshev distance is 1 and their taxicab distance is at
//! most `n - k`. `Proto` is the rank `n-1` relation (unit steps only),
//! `Omega` the rank 0 relation (the full Chebyshev ball). `Khalimsky`
//! links comparable points of the product order at Chebyshev distance 1;
//! it is not translation invariant.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::lattice::{Point, Window};

/// The supported relation families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AdjacencyKind {
    /// Unit steps along one axis; alias of `Cubical(n-1)`.
    Proto,
    /// Full Chebyshev ball; alias of `Cubical(0)`.
    Omega,
    /// Chebyshev distance 1, taxicab distance at most `n - k`.
    Cubical(usize),
    /// Chebyshev distance 1 and comparable in the Khalimsky order.
    Khalimsky,
}

/// An adjacency relation fixed to one ambient dimension.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AdjacencySpec {
    kind: AdjacencyKind,
    dim: usize,
}

impl AdjacencySpec {
    pub fn new(kind: AdjacencyKind, dim: usize) -> Result<Self, Error> {
        if !(1..=crate::lattice::MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim });
        }
        if let AdjacencyKind::Cubical(k) = kind {
            if k >= dim {
                return Err(Error::InvalidCubicalRank { rank: k, dim });
            }
        }
        Ok(AdjacencySpec { kind, dim })
    }

    pub fn proto(dim: usize) -> Result<Self, Error> {
        Self::new(AdjacencyKind::Proto, dim)
    }

    pub fn omega(dim: usize) -> Result<Self, Error> {
        Self::new(AdjacencyKind::Omega, dim)
    }

    pub fn cubical(rank: usize, dim: usize) -> Result<Self, Error> {
        Self::new(AdjacencyKind::Cubical(rank), dim)
    }

    pub fn khalimsky(dim: usize) -> Result<Self, Error> {
        Self::new(AdjacencyKind::Khalimsky, dim)
    }

    pub fn kind(&self) -> AdjacencyKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The cubical rank this relation coincides with, when it has one.
    /// `Proto` and `Omega` are cubical in disguise; `Khalimsky` is not.
    pub fn cubical_rank(&self) -> Option<usize> {
        match self.kind {
            AdjacencyKind::Proto => Some(self.dim - 1),
            AdjacencyKind::Omega => Some(0),
            AdjacencyKind::Cubical(k) => Some(k),
            AdjacencyKind::Khalimsky => None,
        }
    }

    /// Neighbor count shared by every point:
    /// sum over i in k..n of C(n, i) * 2^(n-i).
    ///
    /// Errors on `Khalimsky`, whose neighborhoods depend on coordinate
    /// parity and have no uniform size.
    pub fn neighbor_count(&self) -> Result<u64, Error> {
        let k = self.cubical_rank().ok_or(Error::NoUniformNeighborCount)?;
        let n = self.dim;
        let mut total = 0u64;
        for i in k..n {
            total += binomial(n, i) << (n - i);
        }
        Ok(total)
    }

    /// The neighbors of `p`, never containing `p` itself.
    pub fn neighbors(&self, p: &Point) -> Result<PointSet, Error> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim() });
        }
        PointSet::from_points(self.dim, self.neighbors_vec(p))
    }

    /// Whether `p` and `q` are adjacent. Irreflexive and symmetric.
    pub fn are_adjacent(&self, p: &Point, q: &Point) -> Result<bool, Error> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim() });
        }
        if q.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: q.dim() });
        }
        Ok(self.adjacent(p, q))
    }

    pub(crate) fn adjacent(&self, p: &Point, q: &Point) -> bool {
        debug_assert_eq!(p.dim(), self.dim);
        debug_assert_eq!(q.dim(), self.dim);
        if p.linf_distance(q) != 1 {
            return false;
        }
        match self.cubical_rank() {
            Some(k) => p.l1_distance(q) as usize <= self.dim - k,
            None => below(p, q) || below(q, p),
        }
    }

    /// Neighbors as a sorted vector, without the set wrapper.
    pub(crate) fn neighbors_vec(&self, p: &Point) -> Vec<Point> {
        debug_assert_eq!(p.dim(), self.dim);
        let mut out = Vec::new();
        for q in Window::around(*p, 1).points() {
            if q != *p && self.adjacent(p, &q) {
                out.push(q);
            }
        }
        out
    }
}

impl fmt::Display for AdjacencySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AdjacencyKind::Proto => write!(f, "proto"),
            AdjacencyKind::Omega => write!(f, "omega"),
            AdjacencyKind::Cubical(k) => write!(f, "cubical:{k}"),
            AdjacencyKind::Khalimsky => write!(f, "khalimsky"),
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut out: u64 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

/// The Khalimsky order: `p` precedes `q` when on every axis the
/// coordinates agree, or they differ by 1 and the coordinate of `q` is
/// odd. Equivalently, `p` lies in the minimal product-topology
/// neighborhood of `q`.
pub fn khalimsky_below(p: &Point, q: &Point) -> Result<bool, Error> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    Ok(below(p, q))
}

pub(crate) fn below(p: &Point, q: &Point) -> bool {
    (0..p.dim()).all(|axis| {
        let (a, b) = (p.get(axis), q.get(axis));
        a == b || ((a - b).abs() == 1 && q.is_odd(axis))
    })
}

/// A finite set of points of one ambient dimension. Iteration is always
/// in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    dim: usize,
    points: BTreeSet<Point>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Result<Self, Error> {
        if !(1..=crate::lattice::MAX_DIM).contains(&dim) {
            return Err(Error::DimensionOutOfRange { dim });
        }
        Ok(PointSet { dim, points: BTreeSet::new() })
    }

    pub fn from_points(
        dim: usize,
        points: impl IntoIterator<Item = Point>,
    ) -> Result<Self, Error> {
        let mut set = PointSet::empty(dim)?;
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    /// Inserts a point, returning whether it was new.
    pub fn insert(&mut self, p: Point) -> Result<bool, Error> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.dim() });
        }
        Ok(self.points.insert(p))
    }

    pub fn remove(&mut self, p: &Point) -> bool {
        self.points.remove(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn min_point(&self) -> Option<Point> {
        self.points.iter().next().copied()
    }

    /// Smallest window containing every point; `None` when empty.
    pub fn bounding_window(&self) -> Option<Window> {
        let first = self.min_point()?;
        let mut lo = first;
        let mut hi = first;
        for p in self.iter() {
            for axis in 0..self.dim {
                let c = p.get(axis);
                if c < lo.get(axis) {
                    lo = lo.offset(axis, c - lo.get(axis));
                }
                if c > hi.get(axis) {
                    hi = hi.offset(axis, c - hi.get(axis));
                }
            }
        }
        Some(Window::new(lo, hi).expect("corners derived from the same set"))
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.points.is_subset(&other.points)
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::collections::btree_set::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// The blocks of a connectivity partition, ordered by their smallest
/// member. For complement partitions, `unbounded_index` marks the block
/// that continues past every finite window.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentPartition {
    blocks: Vec<PointSet>,
    unbounded_index: Option<usize>,
}

impl ComponentPartition {
    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn unbounded_index(&self) -> Option<usize> {
        self.unbounded_index
    }

    pub fn block_containing(&self, p: &Point) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(p))
    }
}

/// Flood fill of one block, restricted to `universe`.
fn collect_block(
    a: &AdjacencySpec,
    seed: Point,
    universe: &dyn Fn(&Point) -> bool,
    visited: &mut BTreeSet<Point>,
) -> PointSet {
    let mut block = PointSet::empty(a.dim()).expect("dimension already validated");
    let mut queue = vec![seed];
    visited.insert(seed);
    while let Some(p) = queue.pop() {
        block.insert(p).expect("uniform dimension");
        for q in a.neighbors_vec(&p) {
            if universe(&q) && visited.insert(q) {
                queue.push(q);
            }
        }
    }
    block
}

/// Partition of `s` into maximal `a`-connected blocks.
pub fn components(a: &AdjacencySpec, s: &PointSet) -> Result<ComponentPartition, Error> {
    if s.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: s.dim() });
    }
    let mut visited: BTreeSet<Point> = BTreeSet::new();
    let mut blocks = Vec::new();
    for &p in s.iter() {
        if visited.contains(&p) {
            continue;
        }
        blocks.push(collect_block(a, p, &|q| s.contains(q), &mut visited));
    }
    // Seeds are visited in lexicographic order, so each block is created
    // at its smallest member and the list is already ordered.
    Ok(ComponentPartition { blocks, unbounded_index: None })
}

/// Partition of the complement of `m` into `a`-connected blocks.
///
/// The search window is `w` (default: the bounding box of `m`) dilated
/// by 2. Every block touching the shell of the dilated window is part of
/// one infinite background region: the shell is a closed layer of
/// complement points in which any two points can be joined by unit
/// steps, and everything outside the window is complement. Those blocks
/// are therefore merged and flagged unbounded. Blocks strictly inside
/// are exact. For an empty `m` without a window a degenerate box around
/// the origin is used, which yields the single unbounded block.
pub fn complement_components(
    a: &AdjacencySpec,
    m: &PointSet,
    w: Option<&Window>,
) -> Result<ComponentPartition, Error> {
    if m.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: m.dim() });
    }
    let base = match w {
        Some(w) => {
            if w.dim() != m.dim() {
                return Err(Error::DimensionMismatch { expected: m.dim(), found: w.dim() });
            }
            for p in m.iter() {
                if !w.contains(p) {
                    return Err(Error::PointOutsideWindow { point: *p, window: *w });
                }
            }
            *w
        }
        None => m
            .bounding_window()
            .unwrap_or_else(|| Window::around(Point::origin(m.dim()), 0)),
    };
    let universe = base.dilated(2);

    let mut visited: BTreeSet<Point> = BTreeSet::new();
    let mut bounded = Vec::new();
    let mut shell_blocks: Vec<PointSet> = Vec::new();
    let in_universe = |q: &Point| universe.contains(q) && !m.contains(q);
    for p in universe.points() {
        if m.contains(&p) || visited.contains(&p) {
            continue;
        }
        let block = collect_block(a, p, &in_universe, &mut visited);
        if block.iter().any(|q| universe.is_on_shell(q)) {
            shell_blocks.push(block);
        } else {
            bounded.push(block);
        }
    }

    let mut blocks = bounded;
    let mut unbounded_index = None;
    if !shell_blocks.is_empty() {
        let mut merged = PointSet::empty(m.dim())?;
        for b in shell_blocks {
            for &p in b.iter() {
                merged.insert(p)?;
            }
        }
        blocks.push(merged);
        blocks.sort_by_key(|b| b.min_point());
        unbounded_index = blocks
            .iter()
            .position(|b| b.iter().any(|q| universe.is_on_shell(q)));
    } else {
        blocks.sort_by_key(|b| b.min_point());
    }
    Ok(ComponentPartition { blocks, unbounded_index })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[i32]) -> Point {
        Point::new(coords).unwrap()
    }

    fn set(dim: usize, coords: &[&[i32]]) -> PointSet {
        PointSet::from_points(dim, coords.iter().map(|c| pt(c))).unwrap()
    }

    #[test]
    fn cubical_rank_validation() {
        assert!(AdjacencySpec::cubical(2, 2).is_err());
        assert!(AdjacencySpec::cubical(1, 2).is_ok());
        assert!(AdjacencySpec::khalimsky(7).is_err());
        assert_eq!(AdjacencySpec::proto(3).unwrap().cubical_rank(), Some(2));
        assert_eq!(AdjacencySpec::omega(3).unwrap().cubical_rank(), Some(0));
        assert_eq!(AdjacencySpec::khalimsky(3).unwrap().cubical_rank(), None);
    }

    #[test]
    fn planar_cubical_neighborhoods() {
        let four = AdjacencySpec::cubical(1, 2).unwrap();
        let got = four.neighbors(&pt(&[0, 0])).unwrap();
        let want = set(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(got, want);

        let eight = AdjacencySpec::cubical(0, 2).unwrap();
        assert_eq!(eight.neighbors(&pt(&[0, 0])).unwrap().len(), 8);
        assert!(!eight.neighbors(&pt(&[0, 0])).unwrap().contains(&pt(&[0, 0])));
    }

    #[test]
    fn proto_and_omega_match_their_cubical_ranks() {
        for n in 1..=4 {
            let proto = AdjacencySpec::proto(n).unwrap();
            let omega = AdjacencySpec::omega(n).unwrap();
            let lo = AdjacencySpec::cubical(n - 1, n).unwrap();
            let hi = AdjacencySpec::cubical(0, n).unwrap();
            let p = Point::origin(n).offset(0, 3);
            assert_eq!(proto.neighbors(&p).unwrap(), lo.neighbors(&p).unwrap());
            assert_eq!(omega.neighbors(&p).unwrap(), hi.neighbors(&p).unwrap());
        }
    }

    #[test]
    fn neighbor_counts_follow_the_closed_form() {
        assert_eq!(AdjacencySpec::cubical(1, 2).unwrap().neighbor_count().unwrap(), 4);
        assert_eq!(AdjacencySpec::cubical(0, 2).unwrap().neighbor_count().unwrap(), 8);
        assert_eq!(AdjacencySpec::cubical(2, 3).unwrap().neighbor_count().unwrap(), 6);
        assert_eq!(AdjacencySpec::cubical(1, 3).unwrap().neighbor_count().unwrap(), 18);
        assert_eq!(AdjacencySpec::cubical(0, 3).unwrap().neighbor_count().unwrap(), 26);
        assert_eq!(AdjacencySpec::cubical(3, 4).unwrap().neighbor_count().unwrap(), 8);
        assert_eq!(AdjacencySpec::cubical(2, 4).unwrap().neighbor_count().unwrap(), 32);
        assert_eq!(AdjacencySpec::cubical(1, 4).unwrap().neighbor_count().unwrap(), 64);
        assert_eq!(AdjacencySpec::cubical(0, 4).unwrap().neighbor_count().unwrap(), 80);
        assert_eq!(
            AdjacencySpec::khalimsky(2).unwrap().neighbor_count(),
            Err(Error::NoUniformNeighborCount)
        );
    }

    #[test]
    fn neighbor_count_matches_enumeration_everywhere() {
        for n in 1..=crate::lattice::MAX_DIM {
            for k in 0..n {
                let a = AdjacencySpec::cubical(k, n).unwrap();
                let got = a.neighbors(&Point::origin(n)).unwrap().len() as u64;
                assert_eq!(got, a.neighbor_count().unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn khalimsky_order_examples() {
        assert!(khalimsky_below(&pt(&[0, 0]), &pt(&[1, 1])).unwrap());
        assert!(!khalimsky_below(&pt(&[1, 1]), &pt(&[0, 0])).unwrap());
        assert!(khalimsky_below(&pt(&[2, 1]), &pt(&[2, 1])).unwrap());
        assert!(!khalimsky_below(&pt(&[0, 0]), &pt(&[2, 0])).unwrap());
        assert!(khalimsky_below(&pt(&[2, 0]), &pt(&[1, 0])).unwrap());
        assert!(khalimsky_below(&pt(&[0]), &pt(&[-1])).unwrap());
        assert!(khalimsky_below(&pt(&[-2, 4]), &pt(&[-3, 4])).unwrap());
    }

    #[test]
    fn khalimsky_neighborhood_depends_on_parity() {
        let kh = AdjacencySpec::khalimsky(2).unwrap();
        // Mixed parity: only the axis neighbors reaching the odd side.
        let got = kh.neighbors(&pt(&[0, 1])).unwrap();
        assert_eq!(got, set(2, &[&[0, 0], &[0, 2], &[-1, 1], &[1, 1]]));
        // Pure even: the full Chebyshev ball.
        assert_eq!(kh.neighbors(&pt(&[0, 0])).unwrap().len(), 8);
        // Pure odd: the full ball as well, by closure instead of openness.
        assert_eq!(kh.neighbors(&pt(&[1, 1])).unwrap().len(), 8);
        // Mixed parity again, the other way around.
        assert_eq!(kh.neighbors(&pt(&[1, 0])).unwrap(), set(2, &[&[0, 0], &[2, 0], &[1, 1], &[1, -1]]));
    }

    #[test]
    fn adjacency_examples() {
        let eight = AdjacencySpec::cubical(0, 2).unwrap();
        assert!(eight.are_adjacent(&pt(&[0, 0]), &pt(&[1, 1])).unwrap());
        let four = AdjacencySpec::cubical(1, 2).unwrap();
        assert!(!four.are_adjacent(&pt(&[0, 0]), &pt(&[1, 1])).unwrap());
        assert!(!four.are_adjacent(&pt(&[0, 0]), &pt(&[0, 0])).unwrap());
        assert!(four.are_adjacent(&pt(&[0, 0]), &pt(&[0, -1])).unwrap());
        assert!(four
            .are_adjacent(&pt(&[0, 0]), &pt(&[0, 0, 0]))
            .is_err());
    }

    #[test]
    fn diagonal_pair_connectivity_depends_on_the_relation() {
        let s = set(2, &[&[0, 0], &[1, 1]]);
        let eight = AdjacencySpec::cubical(0, 2).unwrap();
        let four = AdjacencySpec::cubical(1, 2).unwrap();
        assert_eq!(components(&eight, &s).unwrap().len(), 1);
        assert_eq!(components(&four, &s).unwrap().len(), 2);
        let empty = PointSet::empty(2).unwrap();
        assert_eq!(components(&eight, &empty).unwrap().len(), 0);
    }

    #[test]
    fn component_blocks_are_ordered_and_partition_the_set() {
        let s = set(2, &[&[0, 0], &[1, 0], &[5, 5], &[-3, 2], &[-3, 3]]);
        let four = AdjacencySpec::cubical(1, 2).unwrap();
        let parts = components(&four, &s).unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts.blocks()[0], set(2, &[&[-3, 2], &[-3, 3]]));
        assert_eq!(parts.blocks()[1], set(2, &[&[0, 0], &[1, 0]]));
        assert_eq!(parts.blocks()[2], set(2, &[&[5, 5]]));
        let total: usize = parts.blocks().iter().map(|b| b.len()).sum();
        assert_eq!(total, s.len());
        assert_eq!(parts.unbounded_index(), None);
    }

    #[test]
    fn diamond_complement_under_unit_steps_keeps_the_hole() {
        let diamond = set(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let four = AdjacencySpec::cubical(1, 2).unwrap();
        let parts = complement_components(&four, &diamond, None).unwrap();
        assert_eq!(parts.len(), 2);
        let unbounded = parts.unbounded_index().unwrap();
        let hole = &parts.blocks()[1 - unbounded];
        assert_eq!(*hole, set(2, &[&[0, 0]]));
        // Bounding box [-1,1]^2 dilated by 2 gives the 7x7 search window.
        let total: usize = parts.blocks().iter().map(|b| b.len()).sum();
        assert_eq!(total, 49 - diamond.len());
    }

    #[test]
    fn diamond_complement_under_the_full_ball_is_one_region() {
        let diamond = set(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let eight = AdjacencySpec::cubical(0, 2).unwrap();
        let parts = complement_components(&eight, &diamond, None).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.unbounded_index(), Some(0));
    }

    #[test]
    fn empty_complement_is_one_unbounded_region() {
        let empty = PointSet::empty(3).unwrap();
        let a = AdjacencySpec::cubical(2, 3).unwrap();
        let parts = complement_components(&a, &empty, None).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts.unbounded_index(), Some(0));
    }

    #[test]
    fn complement_window_must_cover_the_set() {
        let diamond = set(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let four = AdjacencySpec::cubical(1, 2).unwrap();
        let small = Window::new(pt(&[0, 0]), pt(&[1, 1])).unwrap();
        assert!(matches!(
            complement_components(&four, &diamond, Some(&small)),
            Err(Error::PointOutsideWindow { .. })
        ));
    }

    #[test]
    fn bounding_window_spans_the_set() {
        let s = set(2, &[&[3, -1], &[0, 4], &[-2, 2]]);
        let w = s.bounding_window().unwrap();
        assert_eq!(w.lo(), pt(&[-2, -1]));
        assert_eq!(w.hi(), pt(&[3, 4]));
        assert!(PointSet::empty(2).unwrap().bounding_window().is_none());
    }

    #[test]
    fn point_set_rejects_mixed_dimensions() {
        let mut s = PointSet::empty(2).unwrap();
        assert!(s.insert(pt(&[0, 0, 0])).is_err());
        assert!(s.insert(pt(&[0, 0])).unwrap());
        assert!(!s.insert(pt(&[0, 0])).unwrap());
    }
}
