//! Random families and independent oracles shared by the integration tests.
//!
//! The oracles never touch `Arrangement`: cells are clipped out of a large box
//! half-plane by half-plane with exact arithmetic, and chain sizes come from
//! brute force over subsets.

#![allow(dead_code)]

use convex_lines::arrangement::BoundClass;
use convex_lines::geom::{intersect, orientation, side_of};
use convex_lines::subsets::Combinations;
use convex_lines::{Line, LineFamily, Point, Rat};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rat(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rat {
    Rat::new(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// `n` lines with small rational coefficients and distinct slopes. Small
/// coefficients make concurrency common.
pub fn random_family(rng: &mut impl Rng, n: usize, max_num: i64, max_den: i64) -> LineFamily {
    loop {
        let lines: Vec<Line> =
            (0..n).map(|_| Line::new(random_rat(rng, max_num, max_den), random_rat(rng, max_num, max_den))).collect();
        if let Ok(f) = LineFamily::new(lines) {
            return f;
        }
    }
}

/// Some three lines pass through a common point (checked directly).
pub fn has_three_concurrent(f: &LineFamily) -> bool {
    Combinations::new(f.len(), 3).any(|s| {
        let p = intersect(f.get(s[0]), f.get(s[1])).unwrap();
        f.get(s[2]).contains(&p)
    })
}

pub fn random_family_no3(rng: &mut impl Rng, n: usize) -> LineFamily {
    loop {
        let f = random_family(rng, n, 20, 7);
        if !has_three_concurrent(&f) {
            return f;
        }
    }
}

/// Largest number of lines through a single point, by brute force.
pub fn brute_concurrency(f: &LineFamily) -> usize {
    if f.len() < 2 {
        return f.len();
    }
    let mut best = 2;
    for s in Combinations::new(f.len(), 2) {
        let p = intersect(f.get(s[0]), f.get(s[1])).unwrap();
        best = best.max(f.iter().filter(|l| l.contains(&p)).count());
    }
    best
}

/// Largest number of collinear dual points.
pub fn brute_dual_collinear(f: &LineFamily) -> usize {
    let d = f.duals();
    if d.len() < 2 {
        return d.len();
    }
    let mut best = 2;
    for s in Combinations::new(d.len(), 2) {
        best = best.max(d.iter().filter(|r| orientation(&d[s[0]], &d[s[1]], r) == 0).count());
    }
    best
}

/// Half-width of a box that strictly contains every intersection point.
pub fn box_radius(f: &LineFamily) -> Rat {
    let mut r = Rat::one();
    for p in f.vertices() {
        r = r.max(p.x.abs()).max(p.y.abs());
    }
    for l in f.iter() {
        r = r.max(l.c.abs());
    }
    r * Rat::from_int(4) + Rat::one()
}

fn clip(poly: &[Point], line: &Line, sign: i8) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        let (sa, sb) = (side_of(line, a) * sign, side_of(line, b) * sign);
        if sa >= 0 {
            out.push(a.clone());
        }
        if (sa > 0 && sb < 0) || (sa < 0 && sb > 0) {
            let fa = &a.y - line.eval(&a.x);
            let fb = &b.y - line.eval(&b.x);
            let t = &fa / &(&fa - &fb);
            out.push(Point::new(&a.x + &(&t * &(&b.x - &a.x)), &a.y + &(&t * &(&b.y - &a.y))));
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn twice_area(poly: &[Point]) -> Rat {
    let n = poly.len();
    let mut s = Rat::zero();
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        s += &(&a.x * &b.y - &b.x * &a.y);
    }
    s
}

/// The closure of the cell with the given signs, clipped to a box that
/// contains every vertex: `None` if the open cell is empty.
pub struct CellOracle {
    pub polygon: Vec<Point>,
    pub bounding: Vec<usize>,
    pub class: BoundClass,
}

pub fn cell_oracle(f: &LineFamily, signs: &[i8]) -> Option<CellOracle> {
    let r = box_radius(f);
    let nr = -&r;
    let mut poly = vec![
        Point::new(nr.clone(), nr.clone()),
        Point::new(r.clone(), nr.clone()),
        Point::new(r.clone(), r.clone()),
        Point::new(nr.clone(), r.clone()),
    ];
    for (l, &s) in f.iter().zip(signs) {
        poly = clip(&poly, l, s);
        if poly.len() < 3 {
            return None;
        }
    }
    if !twice_area(&poly).is_positive() {
        return None;
    }
    let on_box = |p: &Point| p.x.abs() == r || p.y.abs() == r;
    let mut bounding = Vec::new();
    let mut dirs = Vec::new();
    for (i, l) in f.iter().enumerate() {
        let n = poly.len();
        for k in 0..n {
            let (a, b) = (&poly[k], &poly[(k + 1) % n]);
            if l.contains(a) && l.contains(b) {
                bounding.push(i);
                match (on_box(a), on_box(b)) {
                    (true, true) => {
                        dirs.push(1);
                        dirs.push(-1);
                    }
                    (true, false) => dirs.push((&a.x - &b.x).signum()),
                    (false, true) => dirs.push((&b.x - &a.x).signum()),
                    (false, false) => {}
                }
                break;
            }
        }
    }
    let unbounded = poly.iter().any(on_box);
    let class = if !unbounded {
        BoundClass::Bounded
    } else if !dirs.is_empty() && dirs.iter().all(|&d| d > 0) {
        BoundClass::UnboundedRight
    } else if !dirs.is_empty() && dirs.iter().all(|&d| d < 0) {
        BoundClass::UnboundedLeft
    } else {
        BoundClass::UnboundedOther
    };
    Some(CellOracle { polygon: poly, bounding, class })
}

/// Every feasible sign vector, by trying all `2^n` of them against the oracle.
pub fn brute_cells(f: &LineFamily) -> Vec<Vec<i8>> {
    let n = f.len();
    (0..1u32 << n)
        .map(|mask| (0..n).map(|i| if mask >> i & 1 == 1 { 1 } else { -1 }).collect::<Vec<i8>>())
        .filter(|v| cell_oracle(f, v).is_some())
        .collect()
}

/// Family in convex position per the oracle: some cell bounded by all lines.
pub fn brute_convex(f: &LineFamily) -> bool {
    f.len() >= 2 && brute_cells(f).iter().any(|v| cell_oracle(f, v).unwrap().bounding.len() == f.len())
}

/// Largest subset whose region above (`sign = 1`) or below (`-1`) all of its
/// lines is bounded by each of them.
pub fn brute_chain(f: &LineFamily, sign: i8) -> usize {
    let n = f.len();
    let mut best = 0;
    for mask in 1..1u32 << n {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub = f.subset(&idx);
        let o = cell_oracle(&sub, &vec![sign; k]).expect("the top and bottom cells always exist");
        if o.bounding.len() == k {
            best = k;
        }
    }
    best
}

pub fn random_point(rng: &mut impl Rng, r: &Rat) -> Point {
    let scale = Rat::new(rng.gen_range(-1000..=1000), 1000);
    let scale2 = Rat::new(rng.gen_range(-1000..=1000), 1000);
    Point::new(r * &scale, r * &scale2)
}

/// `(l − 1)/2 · C(p+q−2, q−1) − (l − 3)/2 · C(p+q−4, q−2)`.
pub fn pq_size_bound(p: usize, q: usize, l: usize) -> Rat {
    let b = |n: usize, k: usize| Rat::from_int(convex_lines::subsets::binomial(n as u64, k as u64) as i64);
    Rat::new(l as i64 - 1, 2) * b(p + q - 2, q - 1) - Rat::new(l as i64 - 3, 2) * b(p + q - 4, q - 2)
}
