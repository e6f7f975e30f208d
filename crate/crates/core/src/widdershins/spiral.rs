//! Widdershins spirals as pin sequences, and central insertion.
//!
//! The standard-orientation spiral starts with p1 and p2 (p2 northwest of
//! p1) and adds pins cycling left, down, right, up. Each pin lands one step
//! beyond the current hull on its side and separates the previous pin from
//! the rest. The integer coordinate scheme below realizes that; only the
//! standardized permutation is part of the contract.

use crate::error::{Error, Result};
use crate::perm::{standardize, Permutation, PointSet};

/// Quarter-turn orientation of a spiral. `Standard` places the first point
/// southeast of the center; each step rotates counter-clockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Standard,
    Rot90,
    Rot180,
    Rot270,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::Standard,
        Orientation::Rot90,
        Orientation::Rot180,
        Orientation::Rot270,
    ];

    pub fn quarter_turns(self) -> usize {
        match self {
            Orientation::Standard => 0,
            Orientation::Rot90 => 1,
            Orientation::Rot180 => 2,
            Orientation::Rot270 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Standard => "standard",
            Orientation::Rot90 => "rot90",
            Orientation::Rot180 => "rot180",
            Orientation::Rot270 => "rot270",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Orientation::Standard),
            "rot90" => Ok(Orientation::Rot90),
            "rot180" => Ok(Orientation::Rot180),
            "rot270" => Ok(Orientation::Rot270),
            other => Err(Error::Parse(format!("unknown orientation {other:?}"))),
        }
    }
}

/// One widdershins spiral: an orientation and a length of at least 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpiralSpec {
    pub orientation: Orientation,
    pub length: usize,
}

impl SpiralSpec {
    pub fn new(orientation: Orientation, length: usize) -> Result<Self> {
        if length < 4 {
            return Err(Error::SpiralTooShort(length));
        }
        Ok(SpiralSpec {
            orientation,
            length,
        })
    }
}

/// Pin coordinates of the standard-orientation spiral of length m.
///
/// p1 = (2, -2), p2 = (1, 2), then for i >= 3 with the cycle
/// left, down, right, up (t counts completed cycles):
/// left (-2-2t, 1+2t), down (-1-2t, -5-2t), right (4+2t, -4-2t),
/// up (3+2t, 4+2t).
pub(crate) fn standard_points(m: usize) -> Vec<(i64, i64)> {
    let mut pts = Vec::with_capacity(m);
    if m >= 1 {
        pts.push((2, -2));
    }
    if m >= 2 {
        pts.push((1, 2));
    }
    for i in 3..=m {
        let t = ((i - 3) / 4) as i64;
        let point = match (i - 3) % 4 {
            0 => (-2 - 2 * t, 1 + 2 * t),
            1 => (-1 - 2 * t, -5 - 2 * t),
            2 => (4 + 2 * t, -4 - 2 * t),
            _ => (3 + 2 * t, 4 + 2 * t),
        };
        pts.push(point);
    }
    pts
}

/// The permutation of the widdershins spiral described by `spec`.
pub fn spiral(spec: SpiralSpec) -> Result<Permutation> {
    if spec.length < 4 {
        return Err(Error::SpiralTooShort(spec.length));
    }
    let base = standardize(&PointSet::new(standard_points(spec.length)))?;
    Ok(rotated(base, spec.orientation))
}

fn rotated(mut pi: Permutation, orientation: Orientation) -> Permutation {
    for _ in 0..orientation.quarter_turns() {
        pi = pi.rotate90();
    }
    pi
}

/// Places `alpha` at the center of the spiral (between p1/p3 on the vertical
/// axis and p2/p4 on the horizontal axis, rotated with the orientation). The
/// entries of `alpha` form an interval of the result.
pub fn central_insert(spec: SpiralSpec, alpha: &Permutation) -> Result<Permutation> {
    if spec.length < 4 {
        return Err(Error::SpiralTooShort(spec.length));
    }
    // Inserting into a rotated spiral is the rotation of inserting the
    // counter-rotated alpha into the standard spiral.
    let turns = spec.orientation.quarter_turns();
    let mut inner = alpha.clone();
    for _ in 0..(4 - turns) % 4 {
        inner = inner.rotate90();
    }
    let mut result = central_insert_standard(spec.length, &inner)?;
    for _ in 0..turns {
        result = result.rotate90();
    }
    Ok(result)
}

fn central_insert_standard(m: usize, alpha: &Permutation) -> Result<Permutation> {
    // Scaling the spiral by |alpha| + 1 opens an integer-sized gap at the
    // center: x in (0, k) and y in (-k, 0) touches no spiral point.
    let k = alpha.len() as i64 + 1;
    let mut pts: Vec<(i64, i64)> = standard_points(m)
        .into_iter()
        .map(|(x, y)| (x * k, y * k))
        .collect();
    for (i, &v) in alpha.values().iter().enumerate() {
        pts.push((i as i64 + 1, v as i64 - k));
    }
    standardize(&PointSet::new(pts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::contains;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sp(o: Orientation, m: usize) -> Permutation {
        spiral(SpiralSpec::new(o, m).unwrap()).unwrap()
    }

    #[test]
    fn short_spirals_are_rejected() {
        assert!(matches!(
            SpiralSpec::new(Orientation::Standard, 3),
            Err(Error::SpiralTooShort(3))
        ));
        assert!(spiral(SpiralSpec {
            orientation: Orientation::Standard,
            length: 2
        })
        .is_err());
    }

    #[test]
    fn standard_spiral_values() {
        assert_eq!(sp(Orientation::Standard, 4), p("3142"));
        assert_eq!(sp(Orientation::Standard, 5), p("41532"));
    }

    #[test]
    fn figure_coordinates_standardize_like_the_spiral() {
        // length 16, exactly the drawn pin sequence
        let pts = standard_points(16);
        assert_eq!(
            pts,
            vec![
                (2, -2),
                (1, 2),
                (-2, 1),
                (-1, -5),
                (4, -4),
                (3, 4),
                (-4, 3),
                (-3, -7),
                (6, -6),
                (5, 6),
                (-6, 5),
                (-5, -9),
                (8, -8),
                (7, 8),
                (-8, 7),
                (-7, -11),
            ]
        );
    }

    #[test]
    fn pins_are_proper() {
        // every pin lies outside the hull of all previous points and
        // separates the previous point from the points before it
        let pts = standard_points(20);
        for i in 2..pts.len() {
            let (hx0, hx1, hy0, hy1) = hull(&pts[..i]);
            let (x, y) = pts[i];
            assert!(x < hx0 || x > hx1 || y < hy0 || y > hy1, "pin {i} inside hull");
            let (px, py) = pts[i - 1];
            let (gx0, gx1, gy0, gy1) = hull(&pts[..i - 1]);
            let separates_vertically = (y > gy1 && y < py) || (y < gy0 && y > py);
            let separates_horizontally = (x > gx1 && x < px) || (x < gx0 && x > px);
            assert!(
                separates_vertically || separates_horizontally,
                "pin {i} does not separate"
            );
        }
    }

    fn hull(pts: &[(i64, i64)]) -> (i64, i64, i64, i64) {
        let xs: Vec<i64> = pts.iter().map(|p| p.0).collect();
        let ys: Vec<i64> = pts.iter().map(|p| p.1).collect();
        (
            *xs.iter().min().unwrap(),
            *xs.iter().max().unwrap(),
            *ys.iter().min().unwrap(),
            *ys.iter().max().unwrap(),
        )
    }

    #[test]
    fn rot180_is_reverse_complement() {
        for m in 4..=10 {
            assert_eq!(
                sp(Orientation::Rot180, m),
                sp(Orientation::Standard, m).reverse_complement()
            );
        }
    }

    #[test]
    fn rotations_chain() {
        for m in 4..=9 {
            let std = sp(Orientation::Standard, m);
            assert_eq!(sp(Orientation::Rot90, m), std.rotate90());
            assert_eq!(sp(Orientation::Rot180, m), std.rotate90().rotate90());
            assert_eq!(
                sp(Orientation::Rot270, m),
                std.rotate90().rotate90().rotate90()
            );
        }
    }

    #[test]
    fn central_insert_examples() {
        let four = SpiralSpec::new(Orientation::Standard, 4).unwrap();
        assert_eq!(central_insert(four, &p("")).unwrap(), p("3142"));
        let inserted = central_insert(four, &p("1")).unwrap();
        assert_eq!(inserted, p("41352"));
        // deleting the inserted center entry restores the spiral
        assert_eq!(inserted.delete_at(2), p("3142"));
    }

    #[test]
    fn inserted_block_is_an_interval() {
        let alpha = p("231");
        for o in Orientation::ALL {
            for m in 4..=7 {
                let spec = SpiralSpec::new(o, m).unwrap();
                let result = central_insert(spec, &alpha).unwrap();
                assert_eq!(result.len(), m + alpha.len());
                let has_alpha_interval = result
                    .proper_intervals()
                    .iter()
                    .any(|&(a, b)| b - a + 1 == alpha.len() && result.pattern_at(a, b) == alpha);
                assert!(has_alpha_interval, "o = {o:?}, m = {m}");
            }
        }
    }

    #[test]
    fn empty_insert_is_the_spiral() {
        for o in Orientation::ALL {
            for m in 4..=8 {
                let spec = SpiralSpec::new(o, m).unwrap();
                assert_eq!(central_insert(spec, &p("")).unwrap(), sp(o, m));
            }
        }
    }

    #[test]
    fn spirals_are_skew_merged() {
        let basis = [p("2143"), p("3412")];
        for o in Orientation::ALL {
            for m in 4..=12 {
                let s = sp(o, m);
                for b in &basis {
                    assert!(!contains(b, &s), "spiral {o:?} {m} contains {b}");
                }
            }
        }
    }
}
