//! Points, non-vertical lines, line families and the basic exact predicates.
//!
//! A [`Line`] is always `y = m·x + c`; vertical lines have no representation.
//! The dual transform sends that line to the point `(m, c)` and back.
//!
//! Sign conventions: [`orientation`] is the sign of the cross product
//! `(q − p) × (r − p)`, positive for a left (counter-clockwise) turn.
//! [`side_of`] is the sign of `p.y − (m·p.x + c)`, positive strictly above
//! the line. The two agree: `side_of(l, p) == orientation(a, b, p)` for any
//! two points `a`, `b` of `l` with `a.x < b.x`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(Rat::from_int(x), Rat::from_int(y))
    }

    /// Squared Euclidean distance (exact).
    pub fn dist2(&self, other: &Point) -> Rat {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The non-vertical line `y = m·x + c`. Ordered by `(m, c)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Line {
    pub m: Rat,
    pub c: Rat,
}

impl Line {
    pub fn new(m: Rat, c: Rat) -> Line {
        Line { m, c }
    }

    pub fn from_ints(m: i64, c: i64) -> Line {
        Line::new(Rat::from_int(m), Rat::from_int(c))
    }

    /// Line with slope `m` through `p`.
    pub fn through(p: &Point, m: Rat) -> Line {
        let c = &p.y - &m * &p.x;
        Line { m, c }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        &self.m * x + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        side_of(self, p) == 0
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y = {}·x + {}", self.m, self.c)
    }
}

/// Intersection point of two non-parallel lines.
pub fn intersect(a: &Line, b: &Line) -> Result<Point> {
    if a.m == b.m {
        return Err(Error::ParallelLines(a.m.clone()));
    }
    let x = (&b.c - &a.c) / (&a.m - &b.m);
    let y = a.eval(&x);
    Ok(Point { x, y })
}

/// The dual transform: `y = m·x + c` ↦ `(m, c)`.
pub fn dual_line(l: &Line) -> Point {
    Point::new(l.m.clone(), l.c.clone())
}

/// Inverse of [`dual_line`]: `(m, c)` ↦ `y = m·x + c`.
pub fn dual_point(p: &Point) -> Line {
    Line::new(p.x.clone(), p.y.clone())
}

pub fn orientation(p: &Point, q: &Point, r: &Point) -> i8 {
    let cross = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    cross.signum()
}

pub fn side_of(l: &Line, p: &Point) -> i8 {
    (&p.y - l.eval(&p.x)).signum()
}

/// A family of lines in nearly general position: pairwise distinct slopes,
/// stored in strictly increasing slope order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LineFamily {
    lines: Vec<Line>,
    name: Option<String>,
}

impl LineFamily {
    /// Sorts by slope and rejects repeated slopes.
    pub fn new(mut lines: Vec<Line>) -> Result<LineFamily> {
        lines.sort();
        if let Some(w) = lines.windows(2).find(|w| w[0].m == w[1].m) {
            return Err(Error::DuplicateSlope(w[0].m.clone()));
        }
        Ok(LineFamily { lines, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> LineFamily {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn get(&self, i: usize) -> &Line {
        &self.lines[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Line> {
        self.lines.iter()
    }

    /// Sub-family on the given indices (any order; the result is re-sorted).
    pub fn subset(&self, indices: &[usize]) -> LineFamily {
        let lines = indices.iter().map(|&i| self.lines[i].clone()).collect();
        LineFamily::new(lines).expect("subset of a valid family")
    }

    /// Union of two families; fails if a slope repeats.
    pub fn union(&self, other: &LineFamily) -> Result<LineFamily> {
        let mut lines = self.lines.clone();
        lines.extend(other.lines.iter().cloned());
        LineFamily::new(lines)
    }

    pub fn duals(&self) -> Vec<Point> {
        self.lines.iter().map(dual_line).collect()
    }

    /// All pairwise intersection points, with repetition for concurrent lines.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.len() * self.len().saturating_sub(1) / 2);
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                out.push(intersect(&self.lines[i], &self.lines[j]).expect("distinct slopes"));
            }
        }
        out
    }
}

impl<'a> IntoIterator for &'a LineFamily {
    type Item = &'a Line;
    type IntoIter = std::slice::Iter<'a, Line>;
    fn into_iter(self) -> Self::IntoIter {
        self.lines.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(intersect(&Line::from_ints(1, 0), &Line::from_ints(-1, 0)).unwrap(), pt(0, 0));
        // 2x + 3 = x + 1  =>  x = -2, y = -1
        let p = intersect(&Line::from_ints(2, 3), &Line::from_ints(1, 1)).unwrap();
        assert_eq!(p, pt(-2, -1));
        assert_eq!(&Rat::from_int(2) * &p.x + Rat::from_int(3), p.y);
        assert!(matches!(
            intersect(&Line::from_ints(1, 0), &Line::from_ints(1, 1)),
            Err(Error::ParallelLines(_))
        ));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(dual_line(&Line::from_ints(2, 3)), pt(2, 3));
        assert_eq!(dual_line(&Line::from_ints(0, 0)), pt(0, 0));
        assert_eq!(dual_line(&Line::from_ints(-1, 5)), pt(-1, 5));
        assert_eq!(dual_point(&pt(2, 3)), Line::from_ints(2, 3));
        assert_eq!(dual_point(&pt(0, 0)), Line::from_ints(0, 0));
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(2, 0)), 0);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(1, 1)), 1);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(1, -1)), -1);
    }

    #[test]
    fn side_examples() {
        assert_eq!(side_of(&Line::from_ints(0, 0), &pt(0, 1)), 1);
        assert_eq!(side_of(&Line::from_ints(1, 0), &pt(1, 1)), 0);
        assert_eq!(side_of(&Line::from_ints(2, 3), &pt(0, 0)), -1);
    }

    #[test]
    fn family_sorts_and_rejects_parallels() {
        let f = LineFamily::new(vec![Line::from_ints(1, 0), Line::from_ints(-1, 0), Line::from_ints(0, 1)])
            .unwrap();
        let slopes: Vec<_> = f.iter().map(|l| l.m.clone()).collect();
        assert_eq!(slopes, vec![Rat::from_int(-1), Rat::from_int(0), Rat::from_int(1)]);
        assert!(matches!(
            LineFamily::new(vec![Line::from_ints(1, 0), Line::from_ints(1, 5)]),
            Err(Error::DuplicateSlope(_))
        ));
    }
}
