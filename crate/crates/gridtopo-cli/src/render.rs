//! Binary PGM export of planar point sets: one pixel per lattice point
//! of the window, foreground 0, background 255. Rows run from the
//! window's top edge down, so the image sits in the usual mathematical
//! orientation with the y axis pointing up.

use gridtopo::{Point, PointSet, Window};

pub fn render_pgm(set: &PointSet, window: &Window) -> Vec<u8> {
    let (lo, hi) = (window.lo(), window.hi());
    let width = (hi.get(0) - lo.get(0) + 1) as usize;
    let height = (hi.get(1) - lo.get(1) + 1) as usize;
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.reserve(width * height);
    for y in (lo.get(1)..=hi.get(1)).rev() {
        for x in lo.get(0)..=hi.get(0) {
            let p = Point::new(&[x, y]).expect("two coordinates");
            out.push(if set.contains(&p) { 0 } else { 255 });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_the_diamond() {
        let set = PointSet::from_points(
            2,
            [
                Point::new(&[1, 0]).unwrap(),
                Point::new(&[-1, 0]).unwrap(),
                Point::new(&[0, 1]).unwrap(),
                Point::new(&[0, -1]).unwrap(),
            ],
        )
        .unwrap();
        let window = Window::around(Point::origin(2), 2);
        let bytes = render_pgm(&set, &window);
        let mut expected = b"P5\n5 5\n255\n".to_vec();
        let f = 0u8;
        let b = 255u8;
        #[rustfmt::skip]
        expected.extend_from_slice(&[
            b, b, b, b, b,
            b, b, f, b, b,
            b, f, b, f, b,
            b, b, f, b, b,
            b, b, b, b, b,
        ]);
        assert_eq!(bytes, expected);
    }

    #[test]
    fn empty_set_renders_all_white() {
        let set = PointSet::empty(2).unwrap();
        let window = Window::around(Point::origin(2), 1);
        let mut expected = b"P5\n3 3\n255\n".to_vec();
        expected.extend_from_slice(&[255; 9]);
        assert_eq!(render_pgm(&set, &window), expected);
    }
}
