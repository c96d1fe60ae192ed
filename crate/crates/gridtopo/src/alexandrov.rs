//! Finite spaces in which every point has a minimal open neighborhood.
//!
//! Such a space is described completely by the map from each point to
//! its minimal neighborhood. The constructor checks the axioms this
//! encoding must satisfy: each neighborhood contains its point, the
//! neighborhoods nest (membership implies containment), and distinct
//! points have distinct neighborhoods. The lattice with the Khalimsky
//! product topology is the motivating instance; [`khalimsky_space_on`]
//! builds its subspace on any finite point set.

use std::collections::{BTreeMap, BTreeSet};

use crate::adjacency::PointSet;
use crate::error::Error;
use crate::lattice::Point;

/// A finite space given by minimal open neighborhoods.
#[derive(Clone, Debug)]
pub struct FiniteAlexandrovSpace {
    /// Sorted, so indices are stable and iteration is deterministic.
    elements: Vec<Point>,
    /// Minimal neighborhood of each element, as sorted element indices.
    /// Always contains the element's own index.
    min_nbhd: Vec<Vec<usize>>,
    /// Closure of each element: the indices whose neighborhood contains it.
    closure: Vec<Vec<usize>>,
}

impl FiniteAlexandrovSpace {
    /// Builds a space from `(point, minimal neighborhood)` pairs.
    ///
    /// Rejects neighborhoods that omit their own point, mention points
    /// outside the space, fail to nest, or coincide for distinct points
    /// (which would merge them topologically).
    pub fn new(
        neighborhoods: impl IntoIterator<Item = (Point, PointSet)>,
    ) -> Result<Self, Error> {
        let map: BTreeMap<Point, PointSet> = neighborhoods.into_iter().collect();
        let elements: Vec<Point> = map.keys().copied().collect();
        if let Some(first) = elements.first() {
            for p in &elements {
                if p.dim() != first.dim() {
                    return Err(Error::DimensionMismatch {
                        expected: first.dim(),
                        found: p.dim(),
                    });
                }
            }
        }
        let index_of = |p: &Point| elements.binary_search(p).ok();

        let mut min_nbhd: Vec<Vec<usize>> = Vec::with_capacity(elements.len());
        for (p, nbhd) in &map {
            let mut ids = Vec::with_capacity(nbhd.len());
            for q in nbhd.iter() {
                match index_of(q) {
                    Some(i) => ids.push(i),
                    None => {
                        return Err(Error::NeighborhoodForeignMember {
                            point: *p,
                            member: *q,
                        })
                    }
                }
            }
            if !nbhd.contains(p) {
                return Err(Error::NeighborhoodMissingSelf { point: *p });
            }
            min_nbhd.push(ids);
        }

        // Nesting: q in N(p) requires N(q) subset of N(p).
        for (i, nbhd) in min_nbhd.iter().enumerate() {
            let as_set: BTreeSet<usize> = nbhd.iter().copied().collect();
            for &j in nbhd {
                if !min_nbhd[j].iter().all(|q| as_set.contains(q)) {
                    return Err(Error::NeighborhoodNotNested {
                        point: elements[i],
                        member: elements[j],
                    });
                }
            }
        }

        // Separation: identical neighborhoods would be indistinguishable.
        let mut seen: BTreeMap<&[usize], usize> = BTreeMap::new();
        for (i, nbhd) in min_nbhd.iter().enumerate() {
            if let Some(&j) = seen.get(nbhd.as_slice()) {
                return Err(Error::NotT0 { first: elements[j], second: elements[i] });
            }
            seen.insert(nbhd.as_slice(), i);
        }

        let mut closure: Vec<Vec<usize>> = vec![Vec::new(); elements.len()];
        for (j, nbhd) in min_nbhd.iter().enumerate() {
            for &i in nbhd {
                closure[i].push(j);
            }
        }

        Ok(FiniteAlexandrovSpace { elements, min_nbhd, closure })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Point] {
        &self.elements
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    fn index(&self, p: &Point) -> Result<usize, Error> {
        self.elements.binary_search(p).map_err(|_| Error::UnknownElement { point: *p })
    }

    fn to_set(&self, ids: &[usize]) -> PointSet {
        let dim = self.elements[0].dim();
        PointSet::from_points(dim, ids.iter().map(|&i| self.elements[i]))
            .expect("elements share one dimension")
    }

    /// The minimal open neighborhood of `p`.
    pub fn min_neighborhood(&self, p: &Point) -> Result<PointSet, Error> {
        let i = self.index(p)?;
        Ok(self.to_set(&self.min_nbhd[i]))
    }

    /// The closure of `{p}`: every point whose minimal neighborhood
    /// contains `p`.
    pub fn closure_of(&self, p: &Point) -> Result<PointSet, Error> {
        let i = self.index(p)?;
        Ok(self.to_set(&self.closure[i]))
    }

    /// The adjacency the topology induces: the union of the minimal
    /// neighborhood and the closure of `p`, without `p` itself.
    pub fn induced_adjacency(&self, p: &Point) -> Result<PointSet, Error> {
        let i = self.index(p)?;
        Ok(self.to_set(&self.adjacency_ids(i)))
    }

    fn adjacency_ids(&self, i: usize) -> Vec<usize> {
        let mut ids: BTreeSet<usize> = self.min_nbhd[i].iter().copied().collect();
        ids.extend(self.closure[i].iter().copied());
        ids.remove(&i);
        ids.into_iter().collect()
    }

    /// Smallest open set containing `m`: the union of the minimal
    /// neighborhoods of its points. `m` must consist of elements.
    pub fn u_closure(&self, m: &PointSet) -> PointSet {
        let mut ids: BTreeSet<usize> = BTreeSet::new();
        for p in m.iter() {
            let i = self.index(p).expect("operand must consist of space elements");
            ids.extend(self.min_nbhd[i].iter().copied());
        }
        let ids: Vec<usize> = ids.into_iter().collect();
        if ids.is_empty() {
            return PointSet::empty(m.dim()).expect("dimension validated by the operand");
        }
        self.to_set(&ids)
    }

    /// Topological closure of `m`: the union of the closures of its
    /// points. `m` must consist of elements.
    pub fn c_closure(&self, m: &PointSet) -> PointSet {
        let mut ids: BTreeSet<usize> = BTreeSet::new();
        for p in m.iter() {
            let i = self.index(p).expect("operand must consist of space elements");
            ids.extend(self.closure[i].iter().copied());
        }
        let ids: Vec<usize> = ids.into_iter().collect();
        if ids.is_empty() {
            return PointSet::empty(m.dim()).expect("dimension validated by the operand");
        }
        self.to_set(&ids)
    }

    /// The subspace on `subset`, with neighborhoods intersected down.
    /// `subset` must consist of elements.
    pub fn subspace(&self, subset: &PointSet) -> FiniteAlexandrovSpace {
        let ids: Vec<usize> = subset
            .iter()
            .map(|p| self.index(p).expect("operand must consist of space elements"))
            .collect();
        self.subspace_by_ids(&ids)
    }

    fn subspace_by_ids(&self, ids: &[usize]) -> FiniteAlexandrovSpace {
        let id_set: BTreeSet<usize> = ids.iter().copied().collect();
        let elements: Vec<Point> = id_set.iter().map(|&i| self.elements[i]).collect();
        let renumber: BTreeMap<usize, usize> =
            id_set.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let mut min_nbhd = Vec::with_capacity(elements.len());
        for &old in &id_set {
            min_nbhd.push(
                self.min_nbhd[old]
                    .iter()
                    .filter(|q| id_set.contains(q))
                    .map(|q| renumber[q])
                    .collect::<Vec<usize>>(),
            );
        }
        let mut closure: Vec<Vec<usize>> = vec![Vec::new(); elements.len()];
        for (j, nbhd) in min_nbhd.iter().enumerate() {
            for &i in nbhd {
                closure[i].push(j);
            }
        }
        // Restriction preserves self-membership, nesting and separation,
        // so no re-validation is needed.
        FiniteAlexandrovSpace { elements, min_nbhd, closure }
    }

    /// Dimension of one point: 0 when its punctured minimal neighborhood
    /// is empty, otherwise one more than the dimension of that subspace.
    pub fn point_dimension(&self, p: &Point) -> Result<usize, Error> {
        let i = self.index(p)?;
        let all: Vec<usize> = (0..self.len()).collect();
        let mut memo = BTreeMap::new();
        Ok(self.point_dim_in(&all, i, &mut memo))
    }

    /// Largest point dimension, or `None` for the empty space.
    pub fn space_dimension(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let all: Vec<usize> = (0..self.len()).collect();
        let mut memo = BTreeMap::new();
        Some(self.subset_dim(&all, &mut memo))
    }

    fn point_dim_in(
        &self,
        subset: &[usize],
        i: usize,
        memo: &mut BTreeMap<Vec<usize>, usize>,
    ) -> usize {
        let punctured: Vec<usize> = self.min_nbhd[i]
            .iter()
            .copied()
            .filter(|&q| q != i && subset.binary_search(&q).is_ok())
            .collect();
        if punctured.is_empty() {
            0
        } else {
            1 + self.subset_dim(&punctured, memo)
        }
    }

    fn subset_dim(&self, subset: &[usize], memo: &mut BTreeMap<Vec<usize>, usize>) -> usize {
        if let Some(&d) = memo.get(subset) {
            return d;
        }
        let d = subset
            .iter()
            .map(|&i| self.point_dim_in(subset, i, memo))
            .max()
            .expect("subset dimension is only asked of nonempty subsets");
        memo.insert(subset.to_vec(), d);
        d
    }

    /// Connectivity under the induced adjacency. The empty space counts
    /// as connected.
    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.len()).collect();
        self.subset_connected(&all)
    }

    fn subset_connected(&self, subset: &[usize]) -> bool {
        let Some(&seed) = subset.first() else { return true };
        let in_subset = |q: usize| subset.binary_search(&q).is_ok();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        seen.insert(seed);
        let mut queue = vec![seed];
        while let Some(i) = queue.pop() {
            for q in self.adjacency_ids(i) {
                if in_subset(q) && seen.insert(q) {
                    queue.push(q);
                }
            }
        }
        seen.len() == subset.len()
    }

    /// Recursive surface predicate. A 0-surface is a pair of points
    /// neither of which lies in the other's neighborhood or closure; a
    /// k-surface is a nonempty connected space in which the induced
    /// adjacency of every point is a (k-1)-surface.
    pub fn is_k_surface(&self, k: usize) -> bool {
        let all: Vec<usize> = (0..self.len()).collect();
        self.subset_is_surface(&all, k)
    }

    fn subset_is_surface(&self, subset: &[usize], k: usize) -> bool {
        if k == 0 {
            return subset.len() == 2
                && !self.adjacency_ids(subset[0]).contains(&subset[1]);
        }
        if subset.is_empty() || !self.subset_connected(subset) {
            return false;
        }
        subset.iter().all(|&i| {
            // Induced adjacency in a subspace is the global one cut down.
            let local: Vec<usize> = self
                .adjacency_ids(i)
                .into_iter()
                .filter(|q| subset.binary_search(q).is_ok())
                .collect();
            self.subset_is_surface(&local, k - 1)
        })
    }
}

/// The Khalimsky subspace on a finite set of lattice points. The minimal
/// neighborhood of `p` within the full lattice is the product over axes
/// of `{c}` for even `c` and `{c-1, c, c+1}` for odd `c`; the subspace
/// intersects it with the set.
pub fn khalimsky_space_on(points: &PointSet) -> FiniteAlexandrovSpace {
    let pairs: Vec<(Point, PointSet)> = points
        .iter()
        .map(|&p| {
            let mut nbhd = PointSet::empty(points.dim()).expect("operand dimension is valid");
            for q in khalimsky_min_nbhd(&p) {
                if points.contains(&q) {
                    nbhd.insert(q).expect("uniform dimension");
                }
            }
            (p, nbhd)
        })
        .collect();
    FiniteAlexandrovSpace::new(pairs)
        .expect("restriction of a valid topology stays valid")
}

/// Minimal Khalimsky neighborhood of `p` in the full lattice.
fn khalimsky_min_nbhd(p: &Point) -> Vec<Point> {
    let mut out = vec![*p];
    for axis in 0..p.dim() {
        if p.is_odd(axis) {
            let mut widened = Vec::with_capacity(out.len() * 3);
            for q in out {
                widened.push(q.offset(axis, -1));
                widened.push(q);
                widened.push(q.offset(axis, 1));
            }
            out = widened;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjacency::AdjacencySpec;
    use crate::lattice::Window;

    fn pt(coords: &[i32]) -> Point {
        Point::new(coords).unwrap()
    }

    fn set(dim: usize, coords: &[&[i32]]) -> PointSet {
        PointSet::from_points(dim, coords.iter().map(|c| pt(c))).unwrap()
    }

    fn window_set(lo: &[i32], hi: &[i32]) -> PointSet {
        let w = Window::new(pt(lo), pt(hi)).unwrap();
        PointSet::from_points(w.dim(), w.points()).unwrap()
    }

    #[test]
    fn khalimsky_line_neighborhoods() {
        let space = khalimsky_space_on(&set(1, &[&[0], &[1], &[2]]));
        assert_eq!(space.min_neighborhood(&pt(&[0])).unwrap(), set(1, &[&[0]]));
        assert_eq!(
            space.min_neighborhood(&pt(&[1])).unwrap(),
            set(1, &[&[0], &[1], &[2]])
        );
        assert_eq!(space.closure_of(&pt(&[0])).unwrap(), set(1, &[&[0], &[1]]));
    }

    #[test]
    fn plane_window_neighborhood_and_closure() {
        let space = khalimsky_space_on(&window_set(&[0, 0], &[2, 2]));
        assert_eq!(space.min_neighborhood(&pt(&[1, 1])).unwrap().len(), 9);
        assert_eq!(space.min_neighborhood(&pt(&[0, 0])).unwrap(), set(2, &[&[0, 0]]));
        assert_eq!(space.closure_of(&pt(&[1, 1])).unwrap(), set(2, &[&[1, 1]]));

        let centered = khalimsky_space_on(&window_set(&[-1, -1], &[1, 1]));
        assert_eq!(centered.closure_of(&pt(&[0, 0])).unwrap().len(), 9);
    }

    #[test]
    fn closure_of_a_singleton_space() {
        let space = khalimsky_space_on(&set(2, &[&[0, 0]]));
        assert_eq!(space.closure_of(&pt(&[0, 0])).unwrap(), set(2, &[&[0, 0]]));
        assert_eq!(space.induced_adjacency(&pt(&[0, 0])).unwrap().len(), 0);
    }

    #[test]
    fn unknown_elements_are_rejected() {
        let space = khalimsky_space_on(&set(2, &[&[0, 0]]));
        assert!(matches!(
            space.closure_of(&pt(&[5, 5])),
            Err(Error::UnknownElement { .. })
        ));
    }

    #[test]
    fn induced_adjacency_matches_the_lattice_relation_inside() {
        // On a window, boundary points lose neighbors, interior points
        // agree with the global Khalimsky relation.
        let space = khalimsky_space_on(&window_set(&[-2, -2], &[2, 2]));
        let kh = AdjacencySpec::khalimsky(2).unwrap();
        for p in Window::new(pt(&[-1, -1]), pt(&[1, 1])).unwrap().points() {
            assert_eq!(
                space.induced_adjacency(&p).unwrap(),
                kh.neighbors(&p).unwrap(),
                "disagreement at {p}"
            );
        }
    }

    #[test]
    fn neighborhood_closure_duality() {
        let space = khalimsky_space_on(&window_set(&[0, 0], &[3, 3]));
        for p in space.elements() {
            for q in space.elements() {
                let q_in_np = space.min_neighborhood(p).unwrap().contains(q);
                let p_in_cq = space.closure_of(q).unwrap().contains(p);
                assert_eq!(q_in_np, p_in_cq);
            }
        }
    }

    #[test]
    fn open_hull_laws() {
        let space = khalimsky_space_on(&window_set(&[0, 0], &[3, 3]));
        let empty = PointSet::empty(2).unwrap();
        assert!(space.u_closure(&empty).is_empty());
        assert!(space.c_closure(&empty).is_empty());

        let m = set(2, &[&[1, 1], &[2, 2]]);
        let u = space.u_closure(&m);
        assert!(m.is_subset_of(&u));
        assert_eq!(space.u_closure(&u), u);
        let c = space.c_closure(&m);
        assert!(m.is_subset_of(&c));
        assert_eq!(space.c_closure(&c), c);
    }

    #[test]
    fn constructor_rejects_broken_neighborhoods() {
        // Missing self.
        let bad = vec![(pt(&[0]), set(1, &[&[1]])), (pt(&[1]), set(1, &[&[1]]))];
        assert!(matches!(
            FiniteAlexandrovSpace::new(bad),
            Err(Error::NeighborhoodMissingSelf { .. })
        ));

        // Foreign member.
        let bad = vec![(pt(&[0]), set(1, &[&[0], &[7]]))];
        assert!(matches!(
            FiniteAlexandrovSpace::new(bad),
            Err(Error::NeighborhoodForeignMember { .. })
        ));

        // Not nested: 1's neighborhood contains 0 but not 0's member 2.
        let bad = vec![
            (pt(&[0]), set(1, &[&[0], &[2]])),
            (pt(&[1]), set(1, &[&[0], &[1]])),
            (pt(&[2]), set(1, &[&[2]])),
        ];
        assert!(matches!(
            FiniteAlexandrovSpace::new(bad),
            Err(Error::NeighborhoodNotNested { .. })
        ));

        // Two points sharing one neighborhood.
        let bad = vec![
            (pt(&[0]), set(1, &[&[0], &[1]])),
            (pt(&[1]), set(1, &[&[0], &[1]])),
        ];
        assert!(matches!(FiniteAlexandrovSpace::new(bad), Err(Error::NotT0 { .. })));
    }

    #[test]
    fn dimension_of_khalimsky_pieces() {
        let lone = khalimsky_space_on(&set(2, &[&[0, 0]]));
        assert_eq!(lone.point_dimension(&pt(&[0, 0])).unwrap(), 0);
        assert_eq!(lone.space_dimension(), Some(0));

        let line = khalimsky_space_on(&set(1, &[&[-1], &[0], &[1]]));
        assert_eq!(line.point_dimension(&pt(&[1])).unwrap(), 1);
        assert_eq!(line.point_dimension(&pt(&[0])).unwrap(), 0);
        assert_eq!(line.space_dimension(), Some(1));

        let plane = khalimsky_space_on(&window_set(&[0, 0], &[2, 2]));
        assert_eq!(plane.point_dimension(&pt(&[1, 1])).unwrap(), 2);
        assert_eq!(plane.point_dimension(&pt(&[1, 0])).unwrap(), 1);
        assert_eq!(plane.point_dimension(&pt(&[0, 0])).unwrap(), 0);
        assert_eq!(plane.space_dimension(), Some(2));

        let empty = khalimsky_space_on(&PointSet::empty(2).unwrap());
        assert_eq!(empty.space_dimension(), None);
    }

    #[test]
    fn surface_base_case() {
        let two = khalimsky_space_on(&set(1, &[&[0], &[2]]));
        assert!(two.is_k_surface(0));

        let adjacent = khalimsky_space_on(&set(1, &[&[0], &[1]]));
        assert!(!adjacent.is_k_surface(0));

        let three = khalimsky_space_on(&set(1, &[&[0], &[2], &[4]]));
        assert!(!three.is_k_surface(0));
    }

    #[test]
    fn khalimsky_neighborhood_rings_are_circles() {
        // The induced adjacency ring of any plane point is a 1-surface.
        let kh = AdjacencySpec::khalimsky(2).unwrap();
        for p in [pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0]), pt(&[1, 1])] {
            let ring = khalimsky_space_on(&kh.neighbors(&p).unwrap());
            assert!(ring.is_k_surface(1), "ring of {p}");
            assert!(!ring.is_k_surface(0), "ring of {p}");
            assert!(!ring.is_k_surface(2), "ring of {p}");
        }
    }

    #[test]
    fn broken_ring_is_not_a_circle() {
        let kh = AdjacencySpec::khalimsky(2).unwrap();
        let mut ring = kh.neighbors(&pt(&[0, 0])).unwrap();
        ring.remove(&pt(&[1, 1]));
        assert!(!khalimsky_space_on(&ring).is_k_surface(1));
    }

    #[test]
    fn subspace_restricts_neighborhoods() {
        let plane = khalimsky_space_on(&window_set(&[0, 0], &[2, 2]));
        let sub = plane.subspace(&set(2, &[&[0, 0], &[1, 0], &[2, 0]]));
        assert_eq!(sub.len(), 3);
        assert_eq!(
            sub.min_neighborhood(&pt(&[1, 0])).unwrap(),
            set(2, &[&[0, 0], &[1, 0], &[2, 0]])
        );
        assert_eq!(sub.space_dimension(), Some(1));
    }
}
