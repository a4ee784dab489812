//! Cells of a line arrangement.
//!
//! Every combinatorial question about an arrangement of non-parallel,
//! non-vertical lines reduces to comparing the x-coordinates of pairwise
//! intersections. [`Arrangement`] computes those coordinates once, exactly,
//! and replaces each by its rank among all distinct values. After that,
//! cell enumeration, boundary detection and concurrency are integer
//! comparisons, which is what makes exhaustive subset search affordable.
//!
//! A cell is identified by its [`SignVector`]: `+1` where the cell lies
//! strictly above a line, `-1` where strictly below. Cells are open; points
//! on a line never belong to one.
//!
//! Line `i` bounds a cell (contributes a boundary segment of positive
//! length) iff the set of `x` for which `(x, m_i·x + c_i)` satisfies every
//! other strict inequality of the sign vector is an open interval of positive
//! length. Rays and the full line count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::geom::{intersect, side_of, Line, LineFamily, Point};
use crate::rat::Rat;

/// Per-line signs in `{-1, +1}`, parallel to the family's slope order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all(n: usize, sign: i8) -> SignVector {
        SignVector(vec![sign; n])
    }

    /// Sign vector of a point not lying on any line; `None` otherwise.
    pub fn of_point(family: &LineFamily, p: &Point) -> Option<SignVector> {
        let signs: Vec<i8> = family.iter().map(|l| side_of(l, p)).collect();
        signs.iter().all(|&s| s != 0).then_some(SignVector(signs))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// Which way a cell extends to infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BoundClass {
    Bounded,
    /// Every boundary ray runs toward `+x`.
    UnboundedRight,
    /// Every boundary ray runs toward `-x`.
    UnboundedLeft,
    /// Rays in both directions (cups and caps), or a lone full line.
    UnboundedOther,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn mirror(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    pub fn class(self) -> BoundClass {
        match self {
            Side::Left => BoundClass::UnboundedLeft,
            Side::Right => BoundClass::UnboundedRight,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::ParameterRange(format!("side must be left or right, got {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cell {
    pub signs: SignVector,
    /// Indices (into the family) of the lines contributing a boundary segment.
    pub bounding: Vec<usize>,
    pub bound_class: BoundClass,
    /// A point strictly inside the cell.
    pub witness: Point,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConcurrencyReport {
    /// Largest number of lines through one point (the family size when it
    /// has fewer than two lines).
    pub max_count: usize,
    /// First point attaining `max_count`, in point order.
    pub point: Option<Point>,
    /// Lines through `point`.
    pub lines: Vec<usize>,
    pub all_points_at_max: Vec<Point>,
}

/// Feasible x-interval of a line inside a cell, as ranks of intersection
/// abscissae. `None` stands for the corresponding infinity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    lo: Option<u32>,
    hi: Option<u32>,
}

impl Interval {
    fn has_length(&self) -> bool {
        match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => lo < hi,
            _ => true,
        }
    }
}

/// Precomputed intersection order of a family.
#[derive(Clone, Debug)]
pub struct Arrangement {
    family: LineFamily,
    n: usize,
    /// `rank[i * n + j]`: rank of the x-coordinate where lines `i` and `j` meet.
    rank: Vec<u32>,
    /// Distinct intersection abscissae, indexed by rank.
    roots: Vec<Rat>,
}

impl Arrangement {
    pub fn new(family: &LineFamily) -> Arrangement {
        let n = family.len();
        let mut roots: Vec<(Rat, usize, usize)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (family.get(i), family.get(j));
                roots.push(((&b.c - &a.c) / (&a.m - &b.m), i, j));
            }
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        let mut rank = vec![u32::MAX; n * n];
        let mut values: Vec<Rat> = Vec::new();
        for (x, i, j) in roots {
            if values.last() != Some(&x) {
                values.push(x);
            }
            let r = (values.len() - 1) as u32;
            rank[i * n + j] = r;
            rank[j * n + i] = r;
        }
        Arrangement { family: family.clone(), n, rank, roots: values }
    }

    pub fn family(&self) -> &LineFamily {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    fn rk(&self, i: usize, j: usize) -> u32 {
        self.rank[i * self.n + j]
    }

    /// Sign of line `k` at the intersection of lines `i` and `j`.
    #[inline]
    fn side_at_vertex(&self, i: usize, j: usize, k: usize) -> i8 {
        // On line i: y_i(x) - y_k(x) = (m_i - m_k)(x - x_ik), evaluated at x_ij.
        let slope = if i > k { 1 } else { -1 };
        match self.rk(i, j).cmp(&self.rk(i, k)) {
            std::cmp::Ordering::Less => -slope,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => slope,
        }
    }

    fn interval(&self, s: &[usize], signs: &[i8], pos: usize) -> Interval {
        let i = s[pos];
        let mut iv = Interval { lo: None, hi: None };
        for (q, &j) in s.iter().enumerate() {
            if q == pos {
                continue;
            }
            let r = self.rk(i, j);
            let slope = if i > j { 1 } else { -1 };
            if slope * signs[q] > 0 {
                iv.lo = Some(iv.lo.map_or(r, |lo| lo.max(r)));
            } else {
                iv.hi = Some(iv.hi.map_or(r, |hi| hi.min(r)));
            }
        }
        iv
    }

    /// Positions (into `s`) of the lines bounding the cell `signs` of the
    /// sub-arrangement on `s`. Empty iff the sign vector is infeasible
    /// (for `|s| >= 1`).
    pub fn subset_bounding(&self, s: &[usize], signs: &[i8]) -> Vec<usize> {
        (0..s.len()).filter(|&p| self.interval(s, signs, p).has_length()).collect()
    }

    /// True iff every line of `s` bounds the cell `signs`.
    pub fn subset_all_bound(&self, s: &[usize], signs: &[i8]) -> bool {
        (0..s.len()).all(|p| self.interval(s, signs, p).has_length())
    }

    pub fn subset_classify(&self, s: &[usize], signs: &[i8]) -> Option<BoundClass> {
        let mut any = false;
        let mut any_ray = false;
        let mut all_right = true;
        let mut all_left = true;
        for p in 0..s.len() {
            let iv = self.interval(s, signs, p);
            if !iv.has_length() {
                continue;
            }
            any = true;
            match (iv.lo, iv.hi) {
                (Some(_), Some(_)) => {}
                (Some(_), None) => {
                    any_ray = true;
                    all_left = false;
                }
                (None, Some(_)) => {
                    any_ray = true;
                    all_right = false;
                }
                (None, None) => {
                    any_ray = true;
                    all_left = false;
                    all_right = false;
                }
            }
        }
        if !any {
            return None;
        }
        Some(if !any_ray {
            BoundClass::Bounded
        } else if all_right {
            BoundClass::UnboundedRight
        } else if all_left {
            BoundClass::UnboundedLeft
        } else {
            BoundClass::UnboundedOther
        })
    }

    /// Visits every vertex of the sub-arrangement on `s` once, passing the
    /// positions of its incident lines (in slope order) and the signs of the
    /// other lines there.
    fn for_each_vertex(&self, s: &[usize], mut visit: impl FnMut(&[usize], &[i8]) -> bool) -> bool {
        let k = s.len();
        let mut incident = Vec::with_capacity(k);
        let mut signs = vec![0i8; k];
        for a in 0..k {
            for b in a + 1..k {
                let (i, j) = (s[a], s[b]);
                // Only the pair of the two lowest incident positions reports the vertex.
                if (0..b).any(|q| q != a && self.rk(i, s[q]) == self.rk(i, j)) {
                    continue;
                }
                incident.clear();
                for q in 0..k {
                    let sg = if q == a || q == b { 0 } else { self.side_at_vertex(i, j, s[q]) };
                    signs[q] = sg;
                    if sg == 0 {
                        incident.push(q);
                    }
                }
                if !visit(&incident, &signs) {
                    return false;
                }
            }
        }
        true
    }

    /// Sign vectors of all cells of the sub-arrangement on `s`, sorted.
    pub fn subset_cells(&self, s: &[usize]) -> Vec<Vec<i8>> {
        let mut out = BTreeSet::new();
        if s.len() == 1 {
            out.insert(vec![-1]);
            out.insert(vec![1]);
        }
        self.for_each_vertex(s, |incident, base| {
            for pattern in sector_patterns(incident.len()) {
                let mut v = base.to_vec();
                for (u, &q) in incident.iter().enumerate() {
                    v[q] = pattern[u];
                }
                out.insert(v);
            }
            true
        });
        out.into_iter().collect()
    }

    /// A cell bounded by every line of `s`, if one exists.
    pub fn subset_convex_position(&self, s: &[usize]) -> Option<Vec<i8>> {
        if s.len() < 2 {
            return None;
        }
        let mut found = None;
        let mut seen = BTreeSet::new();
        self.for_each_vertex(s, |incident, base| {
            for pattern in sector_patterns(incident.len()) {
                let mut v = base.to_vec();
                for (u, &q) in incident.iter().enumerate() {
                    v[q] = pattern[u];
                }
                if seen.insert(v.clone()) && self.subset_all_bound(s, &v) {
                    found = Some(v);
                    return false;
                }
            }
            true
        });
        found
    }

    /// The cell of `s` lying between slope-neighbours `t` and `t+1` far to
    /// the `side`. These are exactly the cells unbounded to that side.
    pub fn end_cell(s_len: usize, t: usize, side: Side) -> Vec<i8> {
        (0..s_len)
            .map(|q| {
                let low = q <= t;
                match side {
                    // Far right, lines are stacked by increasing slope.
                    Side::Right => if low { 1 } else { -1 },
                    Side::Left => if low { -1 } else { 1 },
                }
            })
            .collect()
    }

    /// An unbounded-to-`side` cell of `s` bounded by every line of `s`.
    pub fn subset_unbounded_full(&self, s: &[usize], side: Side) -> Option<Vec<i8>> {
        if s.len() < 2 {
            return None;
        }
        (0..s.len() - 1)
            .map(|t| Arrangement::end_cell(s.len(), t, side))
            .find(|v| self.subset_all_bound(s, v))
    }

    /// Lines through each vertex, keyed by vertex, for the full family.
    pub fn vertex_incidences(&self) -> BTreeMap<Point, Vec<usize>> {
        let all: Vec<usize> = (0..self.n).collect();
        let mut out = BTreeMap::new();
        self.for_each_vertex(&all, |incident, _| {
            let i = all[incident[0]];
            let j = all[incident[1]];
            let p = intersect(self.family.get(i), self.family.get(j)).expect("distinct slopes");
            out.insert(p, incident.to_vec());
            true
        });
        out
    }

    /// Number of lines through the busiest vertex of the sub-arrangement on `s`.
    pub fn subset_max_concurrency(&self, s: &[usize]) -> usize {
        if s.len() < 2 {
            return s.len();
        }
        let mut best = 0;
        self.for_each_vertex(s, |incident, _| {
            best = best.max(incident.len());
            true
        });
        best
    }

    /// Multiplicity histogram: number of vertices through which exactly `d` lines pass.
    pub fn concurrency_profile(&self) -> BTreeMap<usize, usize> {
        let all: Vec<usize> = (0..self.n).collect();
        let mut out = BTreeMap::new();
        self.for_each_vertex(&all, |incident, _| {
            *out.entry(incident.len()).or_insert(0) += 1;
            true
        });
        out
    }

    /// Full cell record (with an exact interior point) for a feasible sign
    /// vector of the whole family.
    pub fn cell(&self, signs: &SignVector) -> Result<Cell> {
        let all: Vec<usize> = (0..self.n).collect();
        self.check_len(signs)?;
        let bounding = self.subset_bounding(&all, &signs.0);
        if bounding.is_empty() {
            return Err(Error::InfeasibleSignVector);
        }
        let bound_class = self.subset_classify(&all, &signs.0).expect("feasible");
        let witness = self.interior_point(&signs.0, &bounding);
        Ok(Cell { signs: signs.clone(), bounding, bound_class, witness })
    }

    fn check_len(&self, signs: &SignVector) -> Result<()> {
        if signs.len() != self.n {
            return Err(Error::SignVectorLength { expected: self.n, got: signs.len() });
        }
        if signs.0.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InfeasibleSignVector);
        }
        Ok(())
    }

    /// Exact interior point of a feasible cell: a point of a bounding line's
    /// feasible interval, pushed off the line by less than the distance to
    /// any other line.
    fn interior_point(&self, signs: &[i8], bounding: &[usize]) -> Point {
        let f = &self.family;
        let all: Vec<usize> = (0..self.n).collect();
        let b = bounding[0];
        let iv = self.interval(&all, signs, b);
        let line = f.get(b);
        let root = |r: u32| self.roots[r as usize].clone();
        let x = match (iv.lo, iv.hi) {
            (Some(lo), Some(hi)) => (root(lo) + root(hi)) / Rat::from_int(2),
            (Some(lo), None) => root(lo) + Rat::one(),
            (None, Some(hi)) => root(hi) - Rat::one(),
            (None, None) => Rat::zero(),
        };
        let on_line = Point::new(x.clone(), line.eval(&x));
        // Vertical offset toward the cell, smaller than the gap to every other line.
        let mut gap: Option<Rat> = None;
        for (k, other) in f.iter().enumerate() {
            if k == b {
                continue;
            }
            let d = (&on_line.y - other.eval(&x)).abs();
            gap = Some(match gap {
                Some(g) => g.min(d),
                None => d,
            });
        }
        let step = gap.map_or(Rat::one(), |g| g / Rat::from_int(2));
        let y = if signs[b] > 0 { &on_line.y + &step } else { &on_line.y - &step };
        Point::new(x, y)
    }
}

/// Sign patterns of the `2d` sectors around a vertex of `d` lines, listed
/// for the incident lines in slope order.
fn sector_patterns(d: usize) -> impl Iterator<Item = Vec<i8>> {
    // Rightward sectors: above the t flattest lines, below the rest.
    let right = (0..=d).map(move |t| (0..d).map(|u| if u < t { 1 } else { -1 }).collect());
    // Leftward sectors: below the t flattest lines, above the rest.
    let left = (1..d).map(move |t| (0..d).map(|u| if u < t { -1 } else { 1 }).collect());
    right.chain(left)
}

/// Every cell of the arrangement, sorted by sign vector.
pub fn enumerate_cells(family: &LineFamily) -> Vec<Cell> {
    if family.is_empty() {
        return Vec::new();
    }
    let arr = Arrangement::new(family);
    let all: Vec<usize> = (0..family.len()).collect();
    arr.subset_cells(&all)
        .into_iter()
        .map(|v| arr.cell(&SignVector(v)).expect("enumerated cells are feasible"))
        .collect()
}

pub fn bounding_lines(family: &LineFamily, signs: &SignVector) -> Result<Vec<usize>> {
    Ok(Arrangement::new(family).cell(signs)?.bounding)
}

pub fn classify_cell(family: &LineFamily, signs: &SignVector) -> Result<BoundClass> {
    Ok(Arrangement::new(family).cell(signs)?.bound_class)
}

pub fn max_concurrency(family: &LineFamily) -> ConcurrencyReport {
    if family.len() < 2 {
        return ConcurrencyReport {
            max_count: family.len(),
            point: None,
            lines: (0..family.len()).collect(),
            all_points_at_max: Vec::new(),
        };
    }
    let incidences = Arrangement::new(family).vertex_incidences();
    let max_count = incidences.values().map(Vec::len).max().unwrap_or(0);
    let at_max: Vec<(&Point, &Vec<usize>)> =
        incidences.iter().filter(|(_, v)| v.len() == max_count).collect();
    ConcurrencyReport {
        max_count,
        point: at_max.first().map(|(p, _)| (*p).clone()),
        lines: at_max.first().map(|(_, v)| (*v).clone()).unwrap_or_default(),
        all_points_at_max: at_max.into_iter().map(|(p, _)| p.clone()).collect(),
    }
}

/// A cell bounded by all lines of the family, if the family is in convex position.
pub fn convex_position_witness(family: &LineFamily) -> Option<Cell> {
    let arr = Arrangement::new(family);
    let all: Vec<usize> = (0..family.len()).collect();
    let v = arr.subset_convex_position(&all)?;
    Some(arr.cell(&SignVector(v)).expect("feasible"))
}

/// True iff the family defines a `|family|`-cell. Families of fewer than two
/// lines are never in convex position.
pub fn is_convex_position(family: &LineFamily) -> bool {
    convex_position_witness(family).is_some()
}

/// Lines through `p`.
pub fn lines_through<'a>(family: &'a LineFamily, p: &'a Point) -> impl Iterator<Item = usize> + 'a {
    family.iter().enumerate().filter(move |(_, l): &(usize, &Line)| l.contains(p)).map(|(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(lines: &[(i64, i64)]) -> LineFamily {
        LineFamily::new(lines.iter().map(|&(m, c)| Line::from_ints(m, c)).collect()).unwrap()
    }

    fn triangle() -> LineFamily {
        fam(&[(1, 0), (-1, 0), (0, 1)])
    }

    #[test]
    fn cell_counts() {
        assert_eq!(enumerate_cells(&fam(&[(0, 0)])).len(), 2);
        assert_eq!(enumerate_cells(&fam(&[(1, 0), (-1, 0)])).len(), 4);
        assert_eq!(enumerate_cells(&triangle()).len(), 7);
        // three concurrent lines: 6 wedges
        assert_eq!(enumerate_cells(&fam(&[(1, 0), (2, 0), (3, 0)])).len(), 6);
    }

    #[test]
    fn witnesses_realize_signs() {
        for f in [triangle(), fam(&[(1, 0), (2, 0), (3, 0), (0, 1)]), fam(&[(5, -2)])] {
            for cell in enumerate_cells(&f) {
                assert_eq!(SignVector::of_point(&f, &cell.witness), Some(cell.signs.clone()));
            }
        }
    }

    #[test]
    fn triangle_interior_is_bounded_three_cell() {
        // slope order: y=-x, y=1, y=x; the triangle is below y=1, above both diagonals.
        let f = triangle();
        let signs = SignVector(vec![1, -1, 1]);
        assert_eq!(bounding_lines(&f, &signs).unwrap(), vec![0, 1, 2]);
        assert_eq!(classify_cell(&f, &signs).unwrap(), BoundClass::Bounded);
        assert!(is_convex_position(&f));
    }

    #[test]
    fn upward_wedge_is_other() {
        let f = fam(&[(1, 0), (-1, 0)]);
        let up = SignVector::all(2, 1);
        assert_eq!(bounding_lines(&f, &up).unwrap(), vec![0, 1]);
        assert_eq!(classify_cell(&f, &up).unwrap(), BoundClass::UnboundedOther);
        // the wedge opening to the right: above y=-x, below y=x
        assert_eq!(classify_cell(&f, &SignVector(vec![1, -1])).unwrap(), BoundClass::UnboundedRight);
        assert_eq!(classify_cell(&f, &SignVector(vec![-1, 1])).unwrap(), BoundClass::UnboundedLeft);
    }

    #[test]
    fn concurrent_cells_have_two_bounding_lines() {
        let f = fam(&[(1, 0), (2, 0), (3, 0)]);
        for cell in enumerate_cells(&f) {
            assert_eq!(cell.bounding.len(), 2);
        }
        assert!(!is_convex_position(&f));
    }

    #[test]
    fn infeasible_and_malformed_sign_vectors() {
        let f = triangle();
        // below both diagonals and above y = 1 is empty
        assert_eq!(bounding_lines(&f, &SignVector(vec![-1, 1, -1])), Err(Error::InfeasibleSignVector));
        assert!(matches!(bounding_lines(&f, &SignVector(vec![1, 1])), Err(Error::SignVectorLength { .. })));
    }

    #[test]
    fn single_line_half_planes() {
        let f = fam(&[(0, 0)]);
        let cells = enumerate_cells(&f);
        assert_eq!(cells.len(), 2);
        for c in &cells {
            assert_eq!(c.bounding, vec![0]);
            assert_eq!(c.bound_class, BoundClass::UnboundedOther);
        }
        assert!(!is_convex_position(&f));
    }

    #[test]
    fn concurrency() {
        let pencil = LineFamily::new((1..=5).map(|m| Line::from_ints(m, -1)).collect()).unwrap();
        let r = max_concurrency(&pencil);
        assert_eq!(r.max_count, 5);
        assert_eq!(r.point, Some(Point::from_ints(0, -1)));
        assert_eq!(max_concurrency(&triangle()).max_count, 2);
        assert_eq!(max_concurrency(&triangle()).all_points_at_max.len(), 3);
        assert_eq!(max_concurrency(&fam(&[(1, 1)])).max_count, 1);
    }

    #[test]
    fn two_lines_are_in_convex_position() {
        assert!(is_convex_position(&fam(&[(3, 1), (-2, 7)])));
    }
}
