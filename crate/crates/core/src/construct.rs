//! Generators for the extremal families.
//!
//! Every generator is deterministic and exact. Wherever the construction
//! only asks for "a sufficiently small" parameter, the generator picks a
//! concrete rational, checks the resulting family exactly, and halves the
//! parameter until the check passes.
//!
//! The building blocks:
//!
//! * [`pencil`]: lines through a common apex;
//! * [`contract`]: the image of a family under an affine map that squeezes
//!   every slope toward an anchor line's slope and shrinks all intersections
//!   into a small disk on the anchor below the x-axis;
//! * [`base`] / [`base_caps`]: pencils of `l - 1` lines strung along a cup
//!   (no `(p+1)`-cup, no 3-cap) and the mirrored version;
//! * [`family_pq`]: the recursive merge of two contracted families;
//! * [`prop32`], [`thm12`]: families with no `l` concurrent lines and no `n`
//!   lines in convex position, assembled by planting a contracted family on
//!   every line of a scaffold;
//! * [`figure10`]: two pencils of `l - 1` lines plus two lines, a `2l`-line
//!   family with no 5 lines in convex position.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::arrangement::{Arrangement, Side};
use crate::chains::{longest_cap, longest_cup, subset_k_cell_unbounded};
use crate::error::{Error, Result};
use crate::geom::{orientation, Line, LineFamily, Point};
use crate::rat::Rat;
use crate::subsets::binomial;

const MAX_REFINEMENTS: u32 = 32;

/// Exhaustive convex-position checks inside the assembly generators run only
/// below this many subsets.
pub const ASSEMBLY_SUBSET_LIMIT: u64 = 200_000;

fn range_err(msg: impl Into<String>) -> Error {
    Error::ParameterRange(msg.into())
}

/// Lines with the given slopes through `apex`.
pub fn pencil(apex: &Point, slopes: &[Rat]) -> Result<LineFamily> {
    LineFamily::new(slopes.iter().map(|m| Line::through(apex, m.clone())).collect())
}

/// Mirror image in the y-axis: `y = m·x + c` becomes `y = -m·x + c`.
/// Cups and caps are kept; left and right swap.
pub fn reflect_y(family: &LineFamily) -> LineFamily {
    LineFamily::new(family.iter().map(|l| Line::new(-&l.m, l.c.clone())).collect())
        .expect("negated slopes stay distinct")
}

/// Mirror image in the x-axis: `y = m·x + c` becomes `y = -m·x - c`.
/// Cups and caps swap; left and right are kept.
pub fn reflect_x(family: &LineFamily) -> LineFamily {
    LineFamily::new(family.iter().map(|l| Line::new(-&l.m, -&l.c)).collect())
        .expect("negated slopes stay distinct")
}

/// The affine map `(x, y) ↦ (a·x + tx, b·x + g·y + ty)` with `a, g > 0`.
///
/// Such maps fix the vertical direction and preserve orientation, so they
/// keep above/below and left/right: cups, caps, concurrency and every
/// boundedness class of every cell are carried over unchanged.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerticalAffine {
    pub a: Rat,
    pub b: Rat,
    pub g: Rat,
    pub tx: Rat,
    pub ty: Rat,
}

impl VerticalAffine {
    pub fn shear_translate(shear: Rat, ty: Rat) -> VerticalAffine {
        VerticalAffine { a: Rat::one(), b: shear, g: Rat::one(), tx: Rat::zero(), ty }
    }

    pub fn apply_point(&self, p: &Point) -> Point {
        Point::new(&self.a * &p.x + &self.tx, &self.b * &p.x + &self.g * &p.y + &self.ty)
    }

    pub fn apply_line(&self, l: &Line) -> Line {
        let m = (&self.b + &self.g * &l.m) / &self.a;
        let c = &self.g * &l.c + &self.ty - &m * &self.tx;
        Line::new(m, c)
    }

    pub fn apply(&self, family: &LineFamily) -> LineFamily {
        assert!(self.a.is_positive() && self.g.is_positive());
        LineFamily::new(family.iter().map(|l| self.apply_line(l)).collect())
            .expect("slope order is preserved")
    }
}

/// Point of `anchor` at height -1 (or the closest sensible point below the
/// x-axis for a horizontal anchor).
fn anchor_point(anchor: &Line) -> Point {
    if anchor.m.is_zero() {
        let y = if anchor.c.is_negative() { anchor.c.clone() } else { Rat::from_int(-1) };
        Point::new(Rat::zero(), y)
    } else {
        let y = Rat::from_int(-1);
        let x = (&y - &anchor.c) / &anchor.m;
        Point::new(x, y)
    }
}

fn bbox(points: &[Point]) -> Option<(Rat, Rat, Rat, Rat)> {
    let first = points.first()?;
    let (mut x0, mut x1, mut y0, mut y1) =
        (first.x.clone(), first.x.clone(), first.y.clone(), first.y.clone());
    for p in &points[1..] {
        if p.x < x0 {
            x0 = p.x.clone();
        }
        if p.x > x1 {
            x1 = p.x.clone();
        }
        if p.y < y0 {
            y0 = p.y.clone();
        }
        if p.y > y1 {
            y1 = p.y.clone();
        }
    }
    Some((x0, x1, y0, y1))
}

/// Orientation of every slope-ordered triple of dual points. Two families
/// with equal signatures (and equal size) have combinatorially identical
/// arrangements, including cups, caps, concurrency and cell classes.
pub fn dual_signature(family: &LineFamily) -> Vec<i8> {
    let d = family.duals();
    let n = d.len();
    let mut out = Vec::with_capacity(n * n * n / 6);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(orientation(&d[i], &d[j], &d[k]));
            }
        }
    }
    out
}

/// Why a contracted family fails properties (i)–(iii) or stops being
/// combinatorially equivalent to its source.
pub fn contraction_defect(source: &LineFamily, image: &LineFamily, anchor: &Line, epsilon: &Rat) -> Option<String> {
    if source.len() != image.len() {
        return Some("size changed".into());
    }
    if let Some(l) = image.iter().find(|l| (&l.m - &anchor.m).abs() >= *epsilon) {
        return Some(format!("slope {} not within epsilon of {}", l.m, anchor.m));
    }
    let verts = image.vertices();
    if let Some(v) = verts.iter().find(|v| !v.y.is_negative()) {
        return Some(format!("intersection {v} not below the x-axis"));
    }
    if let Some((x0, x1, y0, y1)) = bbox(&verts) {
        // the bounding-box diagonal dominates every pairwise distance
        let diag = Point::new(x0, y0).dist2(&Point::new(x1, y1));
        if diag > epsilon * epsilon {
            return Some("intersections spread wider than epsilon".into());
        }
    }
    if dual_signature(source) != dual_signature(image) {
        return Some("arrangement combinatorics changed".into());
    }
    None
}

/// `F(a, ε)`: an image of `family` under a [`VerticalAffine`] map such that
/// (i) every slope is within `ε` of the anchor's slope, (ii) every
/// intersection lies below the x-axis, and (iii) all intersections lie within
/// distance `ε` of each other. The result is checked exactly, including that
/// the dual orientation signature (hence every cup, cap, concurrency and
/// unbounded cell) is unchanged.
pub fn contract(family: &LineFamily, anchor: &Line, epsilon: &Rat) -> Result<LineFamily> {
    contract_with_map(family, anchor, epsilon).map(|(f, _)| f)
}

pub fn contract_with_map(family: &LineFamily, anchor: &Line, epsilon: &Rat) -> Result<(LineFamily, VerticalAffine)> {
    if !epsilon.is_positive() {
        return Err(range_err("epsilon must be positive"));
    }
    if family.is_empty() {
        return Ok((family.clone(), VerticalAffine::shear_translate(Rat::zero(), Rat::zero())));
    }
    let center = anchor_point(anchor);
    let max_slope = family.iter().map(|l| l.m.abs()).max().expect("nonempty");
    let mut squeeze = (epsilon / ((max_slope + Rat::one()) * Rat::from_int(2))).floor_pow2();

    let verts = family.vertices();
    let (reference, width, height) = match bbox(&verts) {
        Some((x0, x1, y0, y1)) => {
            let r = Point::new((&x0 + &x1) / Rat::from_int(2), (&y0 + &y1) / Rat::from_int(2));
            (r, x1 - x0, y1 - y0)
        }
        None => (Point::new(Rat::zero(), family.get(0).c.clone()), Rat::zero(), Rat::zero()),
    };
    let target = epsilon.clone().min(center.y.abs()) / Rat::from_int(2);
    let spread = &width * (anchor.m.abs() + Rat::one()) + &squeeze * &height + Rat::one();
    let mut scale = (target / spread).floor_pow2();

    for _ in 0..MAX_REFINEMENTS {
        let map = VerticalAffine {
            a: scale.clone(),
            b: &scale * &anchor.m,
            g: &scale * &squeeze,
            tx: &center.x - &scale * &reference.x,
            ty: &center.y - &scale * (&anchor.m * &reference.x + &squeeze * &reference.y),
        };
        let image = map.apply(family);
        if contraction_defect(family, &image, anchor, epsilon).is_none() {
            return Ok((image, map));
        }
        scale = scale / Rat::from_int(2);
        squeeze = squeeze / Rat::from_int(2);
    }
    Err(Error::ConstructionFailed {
        attempts: MAX_REFINEMENTS,
        reason: "contraction never satisfied its checks".into(),
    })
}

/// Why a candidate `F_{p,q}^l` fails: `l` concurrent lines, a `(p+1)`-cup,
/// a `(q+1)`-cap, or four lines defining a 4-cell unbounded to the right.
pub fn pq_defect(family: &LineFamily, l: usize, p: usize, q: usize) -> Option<String> {
    let arr = Arrangement::new(family);
    let all: Vec<usize> = (0..family.len()).collect();
    let conc = arr.subset_max_concurrency(&all);
    if conc >= l {
        return Some(format!("{conc} concurrent lines"));
    }
    let cup = longest_cup(family).size;
    if cup > p {
        return Some(format!("{cup}-cup"));
    }
    let cap = longest_cap(family).size;
    if cap > q {
        return Some(format!("{cap}-cap"));
    }
    if let Some(s) = subset_k_cell_unbounded(family, 4, Side::Right) {
        return Some(format!("lines {s:?} define a 4-cell unbounded to the right"));
    }
    None
}

fn check_params(p: usize, q: usize, l: usize) -> Result<()> {
    if p < 2 || q < 2 {
        return Err(range_err(format!("p and q must be at least 2 (got p={p}, q={q})")));
    }
    if l < 3 {
        return Err(range_err(format!("l must be at least 3 (got {l})")));
    }
    Ok(())
}

/// Pencil slopes: `count` values evenly spread over `[centre - half, centre + half]`.
fn spread_slopes(centre: &Rat, half: &Rat, count: usize) -> Vec<Rat> {
    if count == 1 {
        return vec![centre.clone()];
    }
    (0..count)
        .map(|j| {
            let t = Rat::new(2 * j as i64, (count - 1) as i64) - Rat::one();
            centre + &(half * &t)
        })
        .collect()
}

/// `F_{p,2}^l`: for `i = 1..⌊p/2⌋`, a pencil of `l − 1` lines through the
/// point `(i, i²)` of the parabola `y = x²`, with slopes near the tangent
/// slope `2i`; for odd `p`, one more tangent line at `x = ⌊p/2⌋ + 1`.
///
/// Size is `(l−1)·p/2` for even `p` and `(l−1)·(p−1)/2 + 1` for odd `p`.
/// It has no `l` concurrent lines, no `(p+1)`-cup, no 3-cap and no 4-cell
/// unbounded to the right.
pub fn base(p: usize, l: usize) -> Result<LineFamily> {
    check_params(p, 2, l)?;
    let h = p / 2;
    // Slopes in (2i - 1, 2i + 1) keep each pencil below every other apex.
    let mut half = Rat::new(1, 2);
    for _ in 0..MAX_REFINEMENTS {
        let mut lines = Vec::new();
        for i in 1..=h as i64 {
            let apex = Point::from_ints(i, i * i);
            let slopes = spread_slopes(&Rat::from_int(2 * i), &half, l - 1);
            lines.extend(pencil(&apex, &slopes)?.lines().iter().cloned());
        }
        if p % 2 == 1 {
            let t = h as i64 + 1;
            lines.push(Line::from_ints(2 * t, -t * t));
        }
        let family = LineFamily::new(lines)?;
        if apexes_clear(&family, h, l) && pq_defect(&family, l, p, 2).is_none() {
            return Ok(family.with_name(format!("F_{{{p},2}}^{l}")));
        }
        half = half / Rat::from_int(2);
    }
    Err(Error::ConstructionFailed { attempts: MAX_REFINEMENTS, reason: format!("base({p}, {l})") })
}

/// Each pencil passes strictly below every other apex.
fn apexes_clear(family: &LineFamily, h: usize, l: usize) -> bool {
    let apexes: Vec<Point> = (1..=h as i64).map(|i| Point::from_ints(i, i * i)).collect();
    family.lines().chunks(l - 1).take(h).enumerate().all(|(i, pencil)| {
        pencil.iter().all(|line| {
            apexes
                .iter()
                .enumerate()
                .all(|(j, a)| i == j || line.eval(&a.x) < a.y)
        })
    })
}

/// `F_{2,q}^l`: the x-axis mirror of `F_{q,2}^l`, sheared back to positive
/// slopes. No `l` concurrent lines, no 3-cup, no `(q+1)`-cap, no 4-cell
/// unbounded to the right.
pub fn base_caps(q: usize, l: usize) -> Result<LineFamily> {
    let mirrored = reflect_x(&base(q, l)?);
    let min = mirrored.get(0).m.clone();
    let shear = Rat::one() - min;
    let f = VerticalAffine::shear_translate(shear, Rat::zero()).apply(&mirrored);
    Ok(f.with_name(format!("F_{{2,{q}}}^{l}")))
}

/// Knobs shared by the generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Options {
    /// Multiplies every starting contraction radius before verified halving.
    pub epsilon_scale: Rat,
}

impl Options {
    pub fn new(epsilon_scale: Rat) -> Result<Options> {
        if !epsilon_scale.is_positive() {
            return Err(range_err("epsilon scale must be positive"));
        }
        Ok(Options { epsilon_scale })
    }
}

impl Default for Options {
    fn default() -> Options {
        Options { epsilon_scale: Rat::one() }
    }
}

/// Memoising builder for `F_{p,q}^l`.
#[derive(Default)]
pub struct Builder {
    memo: HashMap<(usize, usize, usize), LineFamily>,
    opts: Options,
}

impl Builder {
    pub fn new() -> Builder {
        Builder::default()
    }

    pub fn with_options(opts: Options) -> Builder {
        Builder { memo: HashMap::new(), opts }
    }

    /// `F_{p,q}^l`, allowing the degenerate `p = 1` or `q = 1` (a single line).
    pub fn family_pq(&mut self, p: usize, q: usize, l: usize) -> Result<LineFamily> {
        if let Some(f) = self.memo.get(&(p, q, l)) {
            return Ok(f.clone());
        }
        let f = if p == 0 || q == 0 {
            return Err(range_err("p and q must be positive"));
        } else if p == 1 || q == 1 {
            LineFamily::new(vec![Line::from_ints(1, 0)])?
        } else if q == 2 {
            base(p, l)?
        } else if p == 2 {
            base_caps(q, l)?
        } else {
            let left = self.family_pq(p - 1, q, l)?;
            let right = self.family_pq(p, q - 1, l)?;
            merge(&left, &right, l, p, q, &self.opts)?
        };
        let f = f.with_name(format!("F_{{{p},{q}}}^{l}"));
        self.memo.insert((p, q, l), f.clone());
        Ok(f)
    }
}

/// `F_{p-1,q}(a1, ε) ∪ F_{p,q-1}(a2, ε)` with `a1: y = x + 1` and the
/// steeper `a2: y = 2x + 1`, which cross at `(0, 1)` above the x-axis.
fn merge(left: &LineFamily, right: &LineFamily, l: usize, p: usize, q: usize, opts: &Options) -> Result<LineFamily> {
    let a1 = Line::from_ints(1, 1);
    let a2 = Line::from_ints(2, 1);
    let mut eps = Rat::new(1, 8) * &opts.epsilon_scale;
    let mut last = String::new();
    for _ in 0..MAX_REFINEMENTS {
        let g1 = contract(left, &a1, &eps)?;
        let g2 = contract(right, &a2, &eps)?;
        match g1.union(&g2) {
            Ok(f) => match pq_defect(&f, l, p, q) {
                None => return Ok(f),
                Some(why) => last = why,
            },
            Err(e) => last = e.to_string(),
        }
        eps = eps / Rat::from_int(2);
    }
    Err(Error::ConstructionFailed { attempts: MAX_REFINEMENTS, reason: format!("F_{{{p},{q}}}^{l}: {last}") })
}

/// `F_{p,q}^l`: no `l` concurrent lines, no `(p+1)`-cup, no `(q+1)`-cap and
/// no 4-cell unbounded to the right, with
/// `|F_{p,q}^l| = |F_{p-1,q}^l| + |F_{p,q-1}^l|`.
pub fn family_pq(p: usize, q: usize, l: usize) -> Result<LineFamily> {
    family_pq_with(p, q, l, &Options::default())
}

pub fn family_pq_with(p: usize, q: usize, l: usize, opts: &Options) -> Result<LineFamily> {
    check_params(p, q, l)?;
    Builder::with_options(opts.clone()).family_pq(p, q, l)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// Plants `pieces[i]` on scaffold line `i` (slope order) by contraction and
/// returns the union, halving `ε` until the union is in nearly general
/// position, has fewer than `l` concurrent lines, and (when the search is
/// small enough) no `n` lines in convex position.
fn assemble(scaffold: &LineFamily, pieces: &[LineFamily], l: usize, n: usize, opts: &Options) -> Result<LineFamily> {
    assert_eq!(scaffold.len(), pieces.len());
    // ε well below the scaffold's slope gaps and the spacing of its anchor points.
    let anchors: Vec<Point> = scaffold.iter().map(anchor_point).collect();
    let mut gap = Rat::one();
    for i in 0..scaffold.len() {
        for j in i + 1..scaffold.len() {
            gap = gap.min((&scaffold.get(j).m - &scaffold.get(i).m).abs());
            let d = (&anchors[i].x - &anchors[j].x).abs();
            if d.is_positive() {
                gap = gap.min(d);
            }
        }
    }
    let mut eps = (gap / Rat::from_int(16)).floor_pow2() * &opts.epsilon_scale;
    let mut last = String::new();
    for _ in 0..MAX_REFINEMENTS {
        let mut lines = Vec::new();
        for (anchor, piece) in scaffold.iter().zip(pieces) {
            lines.extend(contract(piece, anchor, &eps)?.lines().iter().cloned());
        }
        match LineFamily::new(lines) {
            Ok(f) => match assembly_defect(&f, l, n) {
                None => return Ok(f),
                Some(why) => last = why,
            },
            Err(e) => last = e.to_string(),
        }
        eps = eps / Rat::from_int(2);
    }
    Err(Error::ConstructionFailed { attempts: MAX_REFINEMENTS, reason: last })
}

fn assembly_defect(f: &LineFamily, l: usize, n: usize) -> Option<String> {
    let arr = Arrangement::new(f);
    let all: Vec<usize> = (0..f.len()).collect();
    let conc = arr.subset_max_concurrency(&all);
    if conc >= l {
        return Some(format!("{conc} concurrent lines"));
    }
    if binomial(f.len() as u64, n as u64) <= ASSEMBLY_SUBSET_LIMIT {
        if let Some(s) = crate::verify::exists_n_convex(f, n, crate::verify::Prune::Off) {
            return Some(format!("lines {s:?} are in convex position"));
        }
    }
    None
}

/// Translation upward so that every intersection has `y >= 1`.
fn lift_above_axis(f: &LineFamily) -> LineFamily {
    let lift = match f.vertices().into_iter().map(|v| v.y).min() {
        Some(y) if y < Rat::one() => Rat::one() - y,
        _ => Rat::zero(),
    };
    VerticalAffine::shear_translate(Rat::zero(), lift).apply(f)
}

/// Shear to slopes `>= 1`, then lift.
fn positive_and_above_axis(f: &LineFamily) -> LineFamily {
    let min_m = f.get(0).m.clone();
    let shear = if min_m < Rat::one() { Rat::one() - min_m } else { Rat::zero() };
    lift_above_axis(&VerticalAffine::shear_translate(shear, Rat::zero()).apply(f))
}

/// Families with no `l` concurrent lines and no `n` lines in convex
/// position, `n = 2k + 2` (even) or `2k + 1` (odd): a copy of `F_{k,k}^l`
/// (or `F_{k-1,k}^l`) contracted onto every line of the mirrored scaffold
/// `F'_{k,k}` of `C(2k-2, k-1)` lines.
pub fn prop32(l: usize, k: usize, parity: Parity) -> Result<LineFamily> {
    prop32_with(l, k, parity, &Options::default())
}

pub fn prop32_with(l: usize, k: usize, parity: Parity, opts: &Options) -> Result<LineFamily> {
    if l < 3 || k < 2 {
        return Err(range_err(format!("prop32 needs l >= 3 and k >= 2 (got l={l}, k={k})")));
    }
    let mut b = Builder::with_options(opts.clone());
    let scaffold = positive_and_above_axis(&reflect_y(&b.family_pq(k, k, 3)?));
    let full = b.family_pq(k, k, l)?;
    let (n, pieces) = match parity {
        Parity::Even => (2 * k + 2, vec![full; scaffold.len()]),
        Parity::Odd => {
            let short = b.family_pq(k - 1, k, l)?;
            let mut pieces = vec![full];
            pieces.extend(std::iter::repeat_n(short, scaffold.len() - 1));
            (2 * k + 1, pieces)
        }
    };
    let name = format!("prop32 l={l} k={k} {}", if parity == Parity::Even { "even" } else { "odd" });
    Ok(assemble(&scaffold, &pieces, l, n, opts)?.with_name(name))
}

/// The doubled construction: a scaffold `a_1, …, a_{2N}` from
/// `F_{k,k}^3` contracted onto a slope-1 line and its mirror onto a
/// slope −1 line, flipped over the x-axis and lifted; then mirrored copies
/// `F'^l` planted on the first `N` scaffold lines and `F^l` on the rest.
/// No `l` concurrent lines and no `n` lines in convex position.
pub fn thm12(l: usize, n: usize) -> Result<LineFamily> {
    thm12_with(l, n, &Options::default())
}

pub fn thm12_with(l: usize, n: usize, opts: &Options) -> Result<LineFamily> {
    if l < 3 || n < 5 {
        return Err(range_err(format!("thm12 needs l >= 3 and n >= 5 (got l={l}, n={n})")));
    }
    let k = if n % 2 == 0 { (n - 2) / 2 } else { (n - 1) / 2 };
    let mut b = Builder::with_options(opts.clone());
    let f3 = b.family_pq(k, k, 3)?;
    let a = Line::from_ints(1, 1);
    let bl = Line::from_ints(-1, 1);
    let mut eps = Rat::new(1, 8) * &opts.epsilon_scale;
    let mut scaffold = None;
    for _ in 0..MAX_REFINEMENTS {
        let left = contract(&f3, &a, &eps)?;
        let right = contract(&reflect_y(&f3), &bl, &eps)?;
        let u = left.union(&right)?;
        // cross intersections must all sit above the x-axis
        let cross_above = left
            .iter()
            .all(|x| right.iter().all(|y| crate::geom::intersect(x, y).map(|p| p.y.is_positive()).unwrap_or(false)));
        if cross_above {
            scaffold = Some(lift_above_axis(&reflect_x(&u)));
            break;
        }
        eps = eps / Rat::from_int(2);
    }
    let scaffold = scaffold.ok_or_else(|| Error::ConstructionFailed {
        attempts: MAX_REFINEMENTS,
        reason: "scaffold copies never separated".into(),
    })?;
    let half = scaffold.len() / 2;
    let full = b.family_pq(k, k, l)?;
    let full_mirror = reflect_y(&full);
    let mut pieces = Vec::with_capacity(scaffold.len());
    if n % 2 == 0 {
        pieces.extend(std::iter::repeat_n(full_mirror, half));
        pieces.extend(std::iter::repeat_n(full, half));
    } else {
        let short = b.family_pq(k - 1, k, l)?;
        let short_mirror = reflect_y(&short);
        pieces.push(full_mirror);
        pieces.extend(std::iter::repeat_n(short_mirror, half - 1));
        pieces.push(full);
        pieces.extend(std::iter::repeat_n(short, half - 1));
    }
    Ok(assemble(&scaffold, &pieces, l, n, opts)?.with_name(format!("thm12 l={l} n={n}")))
}

/// Two pencils of `l − 1` lines (apexes `(-1, 0)` and `(1, 0)`, gentle
/// positive and negative slopes) and two steep lines crossing just below the
/// midpoint of the apexes: `2l` lines, at most `l − 1` concurrent, no 5 in
/// convex position.
pub fn figure10(l: usize) -> Result<LineFamily> {
    if l < 3 {
        return Err(range_err(format!("l must be at least 3 (got {l})")));
    }
    let count = l - 1;
    let slopes = |lo: Rat, hi: Rat| -> Vec<Rat> {
        (0..count)
            .map(|j| &lo + &((&hi - &lo) * Rat::new(j as i64, (count - 1) as i64)))
            .collect()
    };
    let left = pencil(&Point::from_ints(-1, 0), &slopes(Rat::new(3, 5), Rat::new(9, 10)))?;
    let right = pencil(&Point::from_ints(1, 0), &slopes(Rat::new(-17, 20), Rat::new(-11, 20)))?;
    let drop = Rat::new(-1, 4);
    let steep = LineFamily::new(vec![Line::new(Rat::new(327, 100), drop.clone()), Line::new(Rat::new(-13, 4), drop)])?;
    Ok(left.union(&right)?.union(&steep)?.with_name(format!("figure10 l={l}")))
}

/// What a generated family claims, in a form that fits a file header.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstructionSpec {
    Pencil { count: usize },
    BasePq2 { p: usize, l: usize },
    Base2q { q: usize, l: usize },
    RecursivePq { p: usize, q: usize, l: usize },
    Prop32 { l: usize, k: usize, parity: Parity },
    Thm12 { l: usize, n: usize },
    Figure10 { l: usize },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<LineFamily> {
        self.build_with(&Options::default())
    }

    pub fn build_with(&self, opts: &Options) -> Result<LineFamily> {
        match *self {
            ConstructionSpec::Pencil { count } => {
                if count == 0 {
                    return Err(range_err("pencil needs at least one line"));
                }
                let slopes: Vec<Rat> = (1..=count as i64).map(Rat::from_int).collect();
                pencil(&Point::from_ints(0, -1), &slopes)
            }
            ConstructionSpec::BasePq2 { p, l } => base(p, l),
            ConstructionSpec::Base2q { q, l } => base_caps(q, l),
            ConstructionSpec::RecursivePq { p, q, l } => family_pq_with(p, q, l, opts),
            ConstructionSpec::Prop32 { l, k, parity } => prop32_with(l, k, parity, opts),
            ConstructionSpec::Thm12 { l, n } => thm12_with(l, n, opts),
            ConstructionSpec::Figure10 { l } => figure10(l),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ConstructionSpec::Pencil { .. } => "pencil",
            ConstructionSpec::BasePq2 { .. } => "base_pq2",
            ConstructionSpec::Base2q { .. } => "base_2q",
            ConstructionSpec::RecursivePq { .. } => "recursive_pq",
            ConstructionSpec::Prop32 { parity: Parity::Even, .. } => "prop32_even",
            ConstructionSpec::Prop32 { parity: Parity::Odd, .. } => "prop32_odd",
            ConstructionSpec::Thm12 { n, .. } if n % 2 == 0 => "thm12_even",
            ConstructionSpec::Thm12 { .. } => "thm12_odd",
            ConstructionSpec::Figure10 { .. } => "figure10",
        }
    }

    /// `(key, value)` pairs after the kind, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            ConstructionSpec::Pencil { count } => vec![("count", count)],
            ConstructionSpec::BasePq2 { p, l } => vec![("p", p), ("l", l)],
            ConstructionSpec::Base2q { q, l } => vec![("q", q), ("l", l)],
            ConstructionSpec::RecursivePq { p, q, l } => vec![("p", p), ("q", q), ("l", l)],
            ConstructionSpec::Prop32 { l, k, .. } => vec![("l", l), ("k", k)],
            ConstructionSpec::Thm12 { l, n } => vec![("l", l), ("n", n)],
            ConstructionSpec::Figure10 { l } => vec![("l", l)],
        }
    }

    /// Builds a spec from a kind name and a parameter lookup.
    pub fn from_parts(kind: &str, get: impl Fn(&str) -> Option<usize>) -> Result<ConstructionSpec> {
        let need = |key: &str| get(key).ok_or_else(|| range_err(format!("{kind} needs --{key}")));
        Ok(match kind {
            "pencil" => ConstructionSpec::Pencil { count: get("count").or_else(|| get("l").map(|l| l.saturating_sub(1))).ok_or_else(|| range_err("pencil needs --count or --l"))? },
            "base_pq2" => ConstructionSpec::BasePq2 { p: need("p")?, l: need("l")? },
            "base_2q" => ConstructionSpec::Base2q { q: need("q")?, l: need("l")? },
            "recursive_pq" => ConstructionSpec::RecursivePq { p: need("p")?, q: need("q")?, l: need("l")? },
            "prop32_even" => ConstructionSpec::Prop32 { l: need("l")?, k: need("k")?, parity: Parity::Even },
            "prop32_odd" => ConstructionSpec::Prop32 { l: need("l")?, k: need("k")?, parity: Parity::Odd },
            "thm12" | "thm12_even" | "thm12_odd" => {
                let l = need("l")?;
                let n = match get("n") {
                    Some(n) => n,
                    None => {
                        let k = need("k")?;
                        if kind == "thm12_odd" { 2 * k + 1 } else { 2 * k + 2 }
                    }
                };
                ConstructionSpec::Thm12 { l, n }
            }
            "figure10" => ConstructionSpec::Figure10 { l: need("l")? },
            other => return Err(range_err(format!("unknown construction kind {other:?}"))),
        })
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kind={}", self.kind())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    /// Parses `kind=<name> key=value ...`.
    fn from_str(s: &str) -> Result<ConstructionSpec> {
        let mut kind = None;
        let mut params = HashMap::new();
        for tok in s.split_whitespace() {
            let (k, v) = tok.split_once('=').ok_or_else(|| range_err(format!("expected key=value, got {tok:?}")))?;
            if k == "kind" {
                kind = Some(v.to_string());
            } else {
                let v: usize = v.parse().map_err(|_| range_err(format!("{k} must be an integer")))?;
                params.insert(k.to_string(), v);
            }
        }
        let kind = kind.ok_or_else(|| range_err("missing kind"))?;
        ConstructionSpec::from_parts(&kind, |key| params.get(key).copied())
    }
}
