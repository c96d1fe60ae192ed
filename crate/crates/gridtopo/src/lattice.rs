//! Points, translations, axis-aligned unit cubes and finite windows of the
//! integer lattice. Ambient dimension is between 1 and [`MAX_DIM`].

use std::fmt;

use crate::error::Error;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 6;

fn check_dim(dim: usize) -> Result<(), Error> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::DimensionOutOfRange { dim })
    }
}

/// A lattice point. Comparison is lexicographic on the coordinates,
/// so ordered containers iterate points in lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    dim: u8,
    // Unused tail entries stay zero so derived Eq/Hash/Ord are sound.
    coords: [i32; MAX_DIM],
}

impl Point {
    pub fn new(coords: &[i32]) -> Result<Self, Error> {
        check_dim(coords.len())?;
        let mut buf = [0i32; MAX_DIM];
        buf[..coords.len()].copy_from_slice(coords);
        Ok(Point { dim: coords.len() as u8, coords: buf })
    }

    /// The origin of the given ambient dimension.
    ///
    /// Panics when `dim` is out of range; use [`Point::new`] for fallible
    /// construction from external data.
    pub fn origin(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "ambient dimension {dim} not in 1..={MAX_DIM}");
        Point { dim: dim as u8, coords: [0; MAX_DIM] }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.dim as usize]
    }

    /// Coordinate on one axis. Panics when the axis is out of range.
    pub fn get(&self, axis: usize) -> i32 {
        assert!(axis < self.dim(), "axis {axis} out of range for dimension {}", self.dim());
        self.coords[axis]
    }

    /// Copy of this point moved by `delta` along one axis.
    pub fn offset(&self, axis: usize, delta: i32) -> Point {
        assert!(axis < self.dim(), "axis {axis} out of range for dimension {}", self.dim());
        let mut out = *self;
        out.coords[axis] += delta;
        out
    }

    /// Copy of this point moved by a whole translation.
    /// Panics on mixed dimensions; typed operations never mix them.
    pub fn translated(&self, t: &Translation) -> Point {
        assert_eq!(self.dim(), t.dim(), "translation dimension mismatch");
        let mut out = *self;
        for (c, d) in out.coords.iter_mut().zip(t.delta.iter()) {
            *c += d;
        }
        out
    }

    /// True when the coordinate on `axis` is odd.
    pub fn is_odd(&self, axis: usize) -> bool {
        self.get(axis).rem_euclid(2) == 1
    }

    /// Chebyshev distance. Panics on mixed dimensions.
    pub fn linf_distance(&self, other: &Point) -> i32 {
        assert_eq!(self.dim(), other.dim(), "point dimension mismatch");
        self.coords()
            .iter()
            .zip(other.coords())
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or(0)
    }

    /// Taxicab distance. Panics on mixed dimensions.
    pub fn l1_distance(&self, other: &Point) -> i32 {
        assert_eq!(self.dim(), other.dim(), "point dimension mismatch");
        self.coords().iter().zip(other.coords()).map(|(a, b)| (a - b).abs()).sum()
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A displacement of the lattice. Distinct from [`Point`] on purpose:
/// translations compose and invert, points do not.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Translation {
    dim: u8,
    delta: [i32; MAX_DIM],
}

impl Translation {
    pub fn new(delta: &[i32]) -> Result<Self, Error> {
        check_dim(delta.len())?;
        let mut buf = [0i32; MAX_DIM];
        buf[..delta.len()].copy_from_slice(delta);
        Ok(Translation { dim: delta.len() as u8, delta: buf })
    }

    pub fn zero(dim: usize) -> Self {
        assert!((1..=MAX_DIM).contains(&dim), "ambient dimension {dim} not in 1..={MAX_DIM}");
        Translation { dim: dim as u8, delta: [0; MAX_DIM] }
    }

    /// Unit step along one axis, positive or negative.
    pub fn unit(dim: usize, axis: usize, positive: bool) -> Self {
        let mut t = Translation::zero(dim);
        assert!(axis < dim, "axis {axis} out of range for dimension {dim}");
        t.delta[axis] = if positive { 1 } else { -1 };
        t
    }

    /// Displacement taking `from` to `to`. Panics on mixed dimensions.
    pub fn between(from: &Point, to: &Point) -> Self {
        assert_eq!(from.dim(), to.dim(), "point dimension mismatch");
        let mut t = Translation::zero(from.dim());
        for (i, d) in t.delta.iter_mut().enumerate() {
            *d = to.coords[i] - from.coords[i];
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn delta(&self) -> &[i32] {
        &self.delta[..self.dim as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.delta().iter().all(|&d| d == 0)
    }

    pub fn compose(&self, other: &Translation) -> Translation {
        assert_eq!(self.dim(), other.dim(), "translation dimension mismatch");
        let mut out = *self;
        for (d, e) in out.delta.iter_mut().zip(other.delta.iter()) {
            *d += e;
        }
        out
    }

    pub fn inverse(&self) -> Translation {
        let mut out = *self;
        for d in out.delta.iter_mut() {
            *d = -*d;
        }
        out
    }

    /// A translation is simple when it is nonzero and the greatest common
    /// divisor of the absolute coordinates is 1, i.e. it is not a proper
    /// multiple of a shorter lattice vector.
    pub fn is_simple(&self) -> bool {
        let mut g: u64 = 0;
        for &d in self.delta() {
            g = gcd(g, d.unsigned_abs() as u64);
        }
        g == 1
    }
}

impl fmt::Debug for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.delta().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
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

/// Number of k-dimensional faces of an n-dimensional unit cube:
/// choose the k free axes, then fix each remaining axis to one endpoint.
pub fn count_k_faces(n: usize, k: usize) -> Result<u64, Error> {
    if n > MAX_DIM || k > n {
        return Err(Error::FaceArgsOutOfRange { n, k });
    }
    Ok(binomial(n, k) << (n - k))
}

/// An axis-aligned unit k-cube: the minimal corner plus the set of free
/// axes. Two cubes are equal exactly when they occupy the same points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    anchor: Point,
    axes_mask: u8,
}

/// One corner decomposition of a k-cube `c`: a (k-2)-subcube `subcube`
/// and the two unit translations along the released axes, directed into
/// `c`. The four translates `subcube`, `tau1(subcube)`, `tau2(subcube)`,
/// `tau1(tau2(subcube))` partition the points of `c`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CubeDecomposition {
    pub subcube: Cube,
    pub tau1: Translation,
    pub tau2: Translation,
}

impl Cube {
    /// Cube spanned from `anchor` along the listed distinct axes.
    pub fn new(anchor: Point, axes: &[usize]) -> Result<Self, Error> {
        let mut mask: u8 = 0;
        for &axis in axes {
            if axis >= anchor.dim() {
                return Err(Error::AxisOutOfRange { axis, dim: anchor.dim() });
            }
            if mask & (1 << axis) != 0 {
                return Err(Error::DuplicateAxis { axis });
            }
            mask |= 1 << axis;
        }
        Ok(Cube { anchor, axes_mask: mask })
    }

    /// A single point as a 0-cube.
    pub fn vertex(anchor: Point) -> Self {
        Cube { anchor, axes_mask: 0 }
    }

    /// The standard k-cube {0,1}^k x {0}^(n-k) at the origin.
    pub fn standard(dim: usize, k: usize) -> Result<Self, Error> {
        check_dim(dim)?;
        if k > dim {
            return Err(Error::CubeRankOutOfRange { rank: k, dim });
        }
        let axes: Vec<usize> = (0..k).collect();
        Cube::new(Point::origin(dim), &axes)
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.anchor.dim()
    }

    /// Number of free axes (the k in "k-cube").
    pub fn rank(&self) -> usize {
        self.axes_mask.count_ones() as usize
    }

    /// Free axes in increasing order.
    pub fn axes(&self) -> Vec<usize> {
        (0..self.dim()).filter(|a| self.axes_mask & (1 << a) != 0).collect()
    }

    /// All 2^k points of the cube, in a fixed deterministic order.
    pub fn points(&self) -> Vec<Point> {
        let axes = self.axes();
        let k = axes.len();
        let mut out = Vec::with_capacity(1 << k);
        for bits in 0u32..(1 << k) {
            let mut p = self.anchor;
            for (i, &axis) in axes.iter().enumerate() {
                if bits & (1 << i) != 0 {
                    p = p.offset(axis, 1);
                }
            }
            out.push(p);
        }
        out
    }

    pub fn contains(&self, p: &Point) -> bool {
        if p.dim() != self.dim() {
            return false;
        }
        (0..self.dim()).all(|axis| {
            let a = self.anchor.get(axis);
            let c = p.get(axis);
            if self.axes_mask & (1 << axis) != 0 {
                c == a || c == a + 1
            } else {
                c == a
            }
        })
    }

    /// All j-dimensional faces: choose j free axes to keep, pin each of
    /// the remaining free axes to one of its two ends.
    pub fn subcubes(&self, j: usize) -> Result<Vec<Cube>, Error> {
        let axes = self.axes();
        let k = axes.len();
        if j > k {
            return Err(Error::SubcubeRankOutOfRange { rank: j, cube_rank: k });
        }
        let mut out = Vec::new();
        for keep in 0u32..(1 << k) {
            if keep.count_ones() as usize != j {
                continue;
            }
            let pinned: Vec<usize> =
                (0..k).filter(|i| keep & (1 << i) == 0).map(|i| axes[i]).collect();
            let mut kept_mask: u8 = 0;
            for (i, &axis) in axes.iter().enumerate() {
                if keep & (1 << i) != 0 {
                    kept_mask |= 1 << axis;
                }
            }
            for ends in 0u32..(1 << pinned.len()) {
                let mut anchor = self.anchor;
                for (i, &axis) in pinned.iter().enumerate() {
                    if ends & (1 << i) != 0 {
                        anchor = anchor.offset(axis, 1);
                    }
                }
                out.push(Cube { anchor, axes_mask: kept_mask });
            }
        }
        Ok(out)
    }

    /// All corner decompositions: one per choice of two free axes and one
    /// of the four corners in the plane they span. A k-cube has
    /// 4 * C(k, 2) of them, one for every (k-2)-subcube.
    pub fn decompositions(&self) -> Result<Vec<CubeDecomposition>, Error> {
        let axes = self.axes();
        let k = axes.len();
        if k < 2 {
            return Err(Error::CubeRankTooSmall { cube_rank: k });
        }
        let dim = self.dim();
        let mut out = Vec::with_capacity(4 * k * (k - 1) / 2);
        for ai in 0..k {
            for aj in (ai + 1)..k {
                let (axis_i, axis_j) = (axes[ai], axes[aj]);
                let kept_mask = self.axes_mask & !(1 << axis_i) & !(1 << axis_j);
                for ei in 0..=1 {
                    for ej in 0..=1 {
                        let anchor = self.anchor.offset(axis_i, ei).offset(axis_j, ej);
                        out.push(CubeDecomposition {
                            subcube: Cube { anchor, axes_mask: kept_mask },
                            tau1: Translation::unit(dim, axis_i, ei == 0),
                            tau2: Translation::unit(dim, axis_j, ej == 0),
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cube{{anchor: {:?}, axes: {:?}}}", self.anchor, self.axes())
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A finite axis-aligned box `[lo, hi]` (both corners included).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    lo: Point,
    hi: Point,
}

impl Window {
    pub fn new(lo: Point, hi: Point) -> Result<Self, Error> {
        if lo.dim() != hi.dim() {
            return Err(Error::DimensionMismatch { expected: lo.dim(), found: hi.dim() });
        }
        for axis in 0..lo.dim() {
            if lo.get(axis) > hi.get(axis) {
                return Err(Error::InvalidWindow {
                    axis,
                    lo: lo.get(axis),
                    hi: hi.get(axis),
                });
            }
        }
        Ok(Window { lo, hi })
    }

    /// The cube-shaped window of the given Chebyshev radius around a point.
    pub fn around(center: Point, radius: i32) -> Self {
        assert!(radius >= 0, "window radius must be nonnegative");
        let mut lo = center;
        let mut hi = center;
        for axis in 0..center.dim() {
            lo = lo.offset(axis, -radius);
            hi = hi.offset(axis, radius);
        }
        Window { lo, hi }
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim()
            && (0..self.dim()).all(|a| self.lo.get(a) <= p.get(a) && p.get(a) <= self.hi.get(a))
    }

    pub fn contains_window(&self, other: &Window) -> bool {
        self.contains(&other.lo) && self.contains(&other.hi)
    }

    /// The window grown by `r` in every direction.
    pub fn dilated(&self, r: i32) -> Window {
        assert!(r >= 0, "dilation radius must be nonnegative");
        let mut lo = self.lo;
        let mut hi = self.hi;
        for axis in 0..self.dim() {
            lo = lo.offset(axis, -r);
            hi = hi.offset(axis, r);
        }
        Window { lo, hi }
    }

    /// True when `p` lies on the outermost layer of the window.
    pub fn is_on_shell(&self, p: &Point) -> bool {
        self.contains(p)
            && (0..self.dim()).any(|a| p.get(a) == self.lo.get(a) || p.get(a) == self.hi.get(a))
    }

    pub fn point_count(&self) -> u64 {
        (0..self.dim())
            .map(|a| (self.hi.get(a) - self.lo.get(a) + 1) as u64)
            .product()
    }

    /// All points of the window in lexicographic order.
    pub fn points(&self) -> WindowPoints {
        WindowPoints { window: *self, next: Some(self.lo) }
    }

    /// Every k-cube whose points all lie inside the window, each exactly
    /// once, in a fixed deterministic order.
    pub fn cubes(&self, k: usize) -> Result<impl Iterator<Item = Cube>, Error> {
        let n = self.dim();
        if k > n {
            return Err(Error::CubeRankOutOfRange { rank: k, dim: n });
        }
        let window = *self;
        let masks: Vec<u8> =
            (0u8..(1 << n)).filter(|m| m.count_ones() as usize == k).collect();
        let iter = masks.into_iter().flat_map(move |mask| {
            // Anchors range over the window shrunk by 1 on each free axis.
            let mut hi = window.hi;
            let mut empty = false;
            for axis in 0..n {
                if mask & (1 << axis) != 0 {
                    if window.lo.get(axis) == window.hi.get(axis) {
                        empty = true;
                        break;
                    }
                    hi = hi.offset(axis, -1);
                }
            }
            let anchors = if empty {
                None
            } else {
                Some(Window { lo: window.lo, hi }.points())
            };
            anchors
                .into_iter()
                .flatten()
                .map(move |anchor| Cube { anchor, axes_mask: mask })
        });
        Ok(iter)
    }
}

impl fmt::Debug for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}..{:?}", self.lo, self.hi)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Lexicographic iterator over the points of a window.
pub struct WindowPoints {
    window: Window,
    next: Option<Point>,
}

impl Iterator for WindowPoints {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next?;
        // Odometer step: last axis runs fastest, so output stays sorted.
        let mut succ = current;
        let mut axis = current.dim();
        loop {
            if axis == 0 {
                self.next = None;
                break;
            }
            axis -= 1;
            if succ.get(axis) < self.window.hi.get(axis) {
                succ = succ.offset(axis, 1);
                self.next = Some(succ);
                break;
            }
            succ = succ.offset(axis, self.window.lo.get(axis) - succ.get(axis));
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn pt(coords: &[i32]) -> Point {
        Point::new(coords).unwrap()
    }

    #[test]
    fn point_construction_bounds() {
        assert!(Point::new(&[]).is_err());
        assert!(Point::new(&[0; 7]).is_err());
        assert_eq!(pt(&[1, 2, 3]).dim(), 3);
        assert_eq!(pt(&[1, 2, 3]).coords(), &[1, 2, 3]);
    }

    #[test]
    fn point_order_is_lexicographic() {
        assert!(pt(&[0, 1]) < pt(&[1, 0]));
        assert!(pt(&[1, -1]) < pt(&[1, 0]));
        assert!(pt(&[-2, 5]) < pt(&[0, 0]));
    }

    #[test]
    fn translation_algebra() {
        let t = Translation::new(&[2, -1]).unwrap();
        let u = Translation::new(&[-2, 1]).unwrap();
        assert_eq!(t.compose(&u), Translation::zero(2));
        assert_eq!(t.inverse(), u);
        assert_eq!(pt(&[0, 0]).translated(&t), pt(&[2, -1]));
        assert_eq!(Translation::between(&pt(&[1, 1]), &pt(&[3, 0])), t);
    }

    #[test]
    fn simple_translations() {
        assert!(Translation::new(&[0, 1]).unwrap().is_simple());
        assert!(Translation::new(&[2, 3]).unwrap().is_simple());
        assert!(!Translation::new(&[2, 0]).unwrap().is_simple());
        assert!(!Translation::new(&[0, 0]).unwrap().is_simple());
        assert!(!Translation::new(&[2, -4, 6]).unwrap().is_simple());
        assert!(Translation::new(&[0, -1]).unwrap().is_simple());
    }

    #[test]
    fn face_counts() {
        // A point cube is its own single 0-face.
        assert_eq!(count_k_faces(0, 0).unwrap(), 1);
        assert_eq!(count_k_faces(1, 0).unwrap(), 2);
        assert_eq!(count_k_faces(3, 2).unwrap(), 6);
        assert_eq!(count_k_faces(4, 0).unwrap(), 16);
        assert_eq!(count_k_faces(4, 4).unwrap(), 1);
        assert!(count_k_faces(3, 4).is_err());
        assert!(count_k_faces(7, 1).is_err());
    }

    #[test]
    fn cube_points_are_the_expected_corners() {
        let v = Cube::vertex(pt(&[3, -2]));
        assert_eq!(v.points(), vec![pt(&[3, -2])]);

        let square = Cube::new(pt(&[0, 0]), &[0, 1]).unwrap();
        let got: BTreeSet<Point> = square.points().into_iter().collect();
        let want: BTreeSet<Point> =
            [pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1]), pt(&[1, 1])].into_iter().collect();
        assert_eq!(got, want);

        let c3 = Cube::standard(3, 3).unwrap();
        assert_eq!(c3.points().len(), 8);
        let distinct: BTreeSet<Point> = c3.points().into_iter().collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn cube_rejects_bad_axes() {
        assert!(matches!(
            Cube::new(pt(&[0, 0]), &[2]),
            Err(Error::AxisOutOfRange { axis: 2, dim: 2 })
        ));
        assert!(matches!(
            Cube::new(pt(&[0, 0, 0]), &[1, 1]),
            Err(Error::DuplicateAxis { axis: 1 })
        ));
    }

    #[test]
    fn subcube_counts_match_the_face_formula() {
        for k in 0..=MAX_DIM {
            let cube = Cube::standard(MAX_DIM, k).unwrap();
            for j in 0..=k {
                let faces = cube.subcubes(j).unwrap();
                assert_eq!(faces.len() as u64, count_k_faces(k, j).unwrap(), "k={k} j={j}");
                let distinct: BTreeSet<Cube> = faces.iter().copied().collect();
                assert_eq!(distinct.len(), faces.len(), "duplicate faces for k={k} j={j}");
                for face in &faces {
                    assert_eq!(face.rank(), j);
                    for p in face.points() {
                        assert!(cube.contains(&p));
                    }
                }
            }
            assert!(cube.subcubes(k + 1).is_err());
        }
    }

    #[test]
    fn square_corners_and_edges() {
        let square = Cube::new(pt(&[0, 0]), &[0, 1]).unwrap();
        let corners = square.subcubes(0).unwrap();
        assert_eq!(corners.len(), 4);
        let edges = Cube::standard(3, 3).unwrap().subcubes(1).unwrap();
        assert_eq!(edges.len(), 12);
        assert_eq!(square.subcubes(2).unwrap(), vec![square]);
    }

    #[test]
    fn decompositions_partition_the_cube() {
        for k in 2..=4 {
            let cube = Cube::standard(4, k).unwrap();
            let decs = cube.decompositions().unwrap();
            assert_eq!(decs.len(), 4 * k * (k - 1) / 2);
            for d in &decs {
                assert_eq!(d.subcube.rank(), k - 2);
                let mut seen: BTreeSet<Point> = BTreeSet::new();
                let t12 = d.tau1.compose(&d.tau2);
                for p in d.subcube.points() {
                    for t in [Translation::zero(4), d.tau1, d.tau2, t12] {
                        assert!(seen.insert(p.translated(&t)), "overlapping translate");
                    }
                }
                let cube_pts: BTreeSet<Point> = cube.points().into_iter().collect();
                assert_eq!(seen, cube_pts, "translates must cover the cube");
            }
        }
    }

    #[test]
    fn decomposition_of_the_unit_square() {
        let square = Cube::new(pt(&[0, 0]), &[0, 1]).unwrap();
        let decs = square.decompositions().unwrap();
        assert_eq!(decs.len(), 4);
        let at_origin = decs
            .iter()
            .find(|d| d.subcube.anchor() == pt(&[0, 0]))
            .expect("corner at the origin");
        assert_eq!(at_origin.tau1, Translation::new(&[1, 0]).unwrap());
        assert_eq!(at_origin.tau2, Translation::new(&[0, 1]).unwrap());
        assert!(Cube::vertex(pt(&[0, 0])).decompositions().is_err());
        assert!(Cube::standard(2, 1).unwrap().decompositions().is_err());
    }

    #[test]
    fn window_points_are_sorted_and_complete() {
        let w = Window::new(pt(&[0, -1]), pt(&[1, 1])).unwrap();
        let pts: Vec<Point> = w.points().collect();
        assert_eq!(pts.len() as u64, w.point_count());
        assert_eq!(pts.len(), 6);
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
        assert_eq!(pts[0], pt(&[0, -1]));
        assert_eq!(pts[5], pt(&[1, 1]));
    }

    #[test]
    fn window_validation_and_shell() {
        assert!(Window::new(pt(&[1, 0]), pt(&[0, 0])).is_err());
        let w = Window::around(pt(&[0, 0]), 2);
        assert_eq!(w.lo(), pt(&[-2, -2]));
        assert!(w.is_on_shell(&pt(&[2, 0])));
        assert!(!w.is_on_shell(&pt(&[1, 1])));
        assert!(w.contains_window(&Window::around(pt(&[0, 0]), 1)));
        assert!(!Window::around(pt(&[0, 0]), 1).contains_window(&w));
    }

    #[test]
    fn cube_enumeration_counts() {
        let unit = Window::new(pt(&[0, 0]), pt(&[1, 1])).unwrap();
        assert_eq!(unit.cubes(2).unwrap().count(), 1);
        assert_eq!(unit.cubes(1).unwrap().count(), 4);
        assert_eq!(unit.cubes(0).unwrap().count(), 4);

        let w = Window::new(pt(&[0, 0]), pt(&[2, 2])).unwrap();
        assert_eq!(w.cubes(2).unwrap().count(), 4);

        assert!(w.cubes(3).is_err());
    }

    #[test]
    fn cube_enumeration_is_exact_and_unique() {
        // Cross-check against the face-count formula on a d-wide box:
        // a k-cube needs an anchor in a (d-1)-range on each free axis.
        for n in 1..=3usize {
            let lo = Point::origin(n);
            let hi = Window::around(lo, 1).hi();
            let w = Window::new(lo, hi).unwrap(); // [0,1]^n
            for k in 0..=n {
                let cubes: Vec<Cube> = w.cubes(k).unwrap().collect();
                let expected = count_k_faces(n, k).unwrap();
                assert_eq!(cubes.len() as u64, expected, "n={n} k={k}");
                let distinct: BTreeSet<Cube> = cubes.iter().copied().collect();
                assert_eq!(distinct.len(), cubes.len());
                for c in &cubes {
                    for p in c.points() {
                        assert!(w.contains(&p));
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_window_has_no_wide_cubes() {
        let w = Window::new(pt(&[0, 0]), pt(&[0, 3])).unwrap();
        assert_eq!(w.cubes(2).unwrap().count(), 0);
        assert_eq!(w.cubes(1).unwrap().count(), 3);
        assert_eq!(w.cubes(0).unwrap().count(), 4);
    }
}
