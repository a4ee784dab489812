//! Cups, caps, and cells unbounded to one side.
//!
//! A family forms a cup when it is in convex position and its cell meets
//! every vertical line in a half-line bounded from below, i.e. the region
//! above all lines is bounded by every line. A cap is the mirror image.
//!
//! Under the dual map `y = m·x + c ↦ (m, c)`, the region above all lines is
//! the upper envelope `max_i (m_i·x + c_i)`, which is the support function of
//! the dual points in direction `(x, 1)`. Every line shows up on it exactly
//! when every dual point is a strict vertex of the upper hull, that is, when
//! the duals, sorted by `x`, turn clockwise throughout. So a cup of lines is
//! a strictly concave chain of dual points and a cap of lines a strictly
//! convex one. [`longest_cup`] and [`longest_cap`] run the classic
//! chain program on the duals; [`is_cup`] and [`is_cap`] look at the cells
//! directly. The two routes are tested against each other.

use rayon::prelude::*;

use crate::arrangement::{Arrangement, Cell, SignVector, Side};
use crate::geom::{orientation, LineFamily};
use crate::subsets::Combinations;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ChainKind {
    Cup,
    Cap,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainResult {
    pub size: usize,
    /// Line indices in slope order.
    pub witness: Vec<usize>,
    pub kind: ChainKind,
}

fn envelope_all_bound(family: &LineFamily, sign: i8) -> bool {
    if family.is_empty() {
        return false;
    }
    let arr = Arrangement::new(family);
    let all: Vec<usize> = (0..family.len()).collect();
    arr.subset_all_bound(&all, &SignVector::all(family.len(), sign).0)
}

/// Every line appears on the boundary of the region above all of them.
pub fn is_cup(family: &LineFamily) -> bool {
    envelope_all_bound(family, 1)
}

/// Every line appears on the boundary of the region below all of them.
pub fn is_cap(family: &LineFamily) -> bool {
    envelope_all_bound(family, -1)
}

/// Longest strict chain of dual points turning the required way.
/// `turn = -1` gives concave chains (line cups), `+1` convex ones (line caps).
fn longest_chain(family: &LineFamily, turn: i8) -> Vec<usize> {
    let pts = family.duals();
    let n = pts.len();
    if n <= 1 {
        return (0..n).collect();
    }
    // len[j][i]: longest chain ending with the step j -> i (j < i)
    let mut len = vec![vec![0usize; n]; n];
    let mut pred = vec![vec![usize::MAX; n]; n];
    let mut best = (2usize, 0usize, 1usize);
    for i in 1..n {
        for j in 0..i {
            let mut l = 2;
            let mut p = usize::MAX;
            for k in 0..j {
                if len[k][j] + 1 > l && orientation(&pts[k], &pts[j], &pts[i]) == turn {
                    l = len[k][j] + 1;
                    p = k;
                }
            }
            len[j][i] = l;
            pred[j][i] = p;
            if l > best.0 {
                best = (l, j, i);
            }
        }
    }
    let (_, mut j, mut i) = best;
    let mut chain = vec![i, j];
    while pred[j][i] != usize::MAX {
        let k = pred[j][i];
        chain.push(k);
        i = j;
        j = k;
    }
    chain.reverse();
    chain
}

pub fn longest_cup(family: &LineFamily) -> ChainResult {
    let witness = longest_chain(family, -1);
    ChainResult { size: witness.len(), witness, kind: ChainKind::Cup }
}

pub fn longest_cap(family: &LineFamily) -> ChainResult {
    let witness = longest_chain(family, 1);
    ChainResult { size: witness.len(), witness, kind: ChainKind::Cap }
}

/// A cell of the whole arrangement unbounded to `side` with at least `k`
/// bounding lines.
pub fn has_k_cell_unbounded(family: &LineFamily, k: usize, side: Side) -> Option<Cell> {
    if family.len() < 2 {
        return None;
    }
    let arr = Arrangement::new(family);
    let n = family.len();
    (0..n - 1)
        .map(|t| SignVector(Arrangement::end_cell(n, t, side)))
        .map(|v| arr.cell(&v).expect("end cells are feasible"))
        .find(|c| c.bounding.len() >= k && c.bound_class == side.class())
}

/// First `k`-subset (lexicographic) that defines a `k`-cell unbounded to
/// `side`.
pub fn subset_k_cell_unbounded(family: &LineFamily, k: usize, side: Side) -> Option<Vec<usize>> {
    if k < 2 || family.len() < k {
        return None;
    }
    let arr = Arrangement::new(family);
    let n = family.len();
    (0..=n - k).into_par_iter().find_map_first(|first| {
        Combinations::starting_at(n, k - 1, first + 1).find_map(|rest| {
            let mut s = Vec::with_capacity(k);
            s.push(first);
            s.extend(rest);
            arr.subset_unbounded_full(&s, side).map(|_| s)
        })
    })
}
