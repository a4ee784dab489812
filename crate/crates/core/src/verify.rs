//! Property reports, convex-subset search and the bound formulas.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::arrangement::{max_concurrency, Arrangement, ConcurrencyReport, Side};
use crate::chains::{longest_cap, longest_cup, subset_k_cell_unbounded, ChainResult};
use crate::error::{Error, Result};
use crate::geom::LineFamily;
use crate::rat::Rat;
use crate::subsets::Combinations;

/// Search strategy for [`exists_n_convex`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Prune {
    /// Test every `n`-subset.
    #[default]
    Off,
    /// Grow subsets index by index and drop any branch whose current prefix
    /// is not in convex position. Only sound if convex position is
    /// inherited by subfamilies.
    Hereditary,
}

impl FromStr for Prune {
    type Err = Error;
    fn from_str(s: &str) -> Result<Prune> {
        match s {
            "off" => Ok(Prune::Off),
            "hereditary" => Ok(Prune::Hereditary),
            _ => Err(Error::ParameterRange(format!("prune mode must be off or hereditary, got {s:?}"))),
        }
    }
}

/// The first `n`-subset, in lexicographic order of slope-sorted indices,
/// that is in convex position.
pub fn exists_n_convex(family: &LineFamily, n: usize, prune: Prune) -> Option<Vec<usize>> {
    let size = family.len();
    if n < 2 || n > size {
        return None;
    }
    let arr = Arrangement::new(family);
    match prune {
        Prune::Off => (0..=size - n).into_par_iter().find_map_first(|first| {
            Combinations::starting_at(size, n - 1, first + 1).find_map(|rest| {
                let mut s = Vec::with_capacity(n);
                s.push(first);
                s.extend(rest);
                arr.subset_convex_position(&s).map(|_| s)
            })
        }),
        Prune::Hereditary => (0..=size - n).into_par_iter().find_map_first(|first| {
            let mut s = vec![first];
            grow(&arr, &mut s, n).then_some(s)
        }),
    }
}

fn grow(arr: &Arrangement, s: &mut Vec<usize>, n: usize) -> bool {
    if s.len() == n {
        return true;
    }
    let last = *s.last().expect("nonempty prefix");
    let need = n - s.len();
    for next in last + 1..=arr.len() - need {
        s.push(next);
        if arr.subset_convex_position(s).is_some() && grow(arr, s, n) {
            return true;
        }
        s.pop();
    }
    false
}

/// Largest subfamily in convex position, scanning sizes from the top down so
/// that no heredity assumption is needed.
pub fn largest_convex_subset(family: &LineFamily, prune: Prune) -> Vec<usize> {
    (2..=family.len())
        .rev()
        .find_map(|k| exists_n_convex(family, k, prune))
        .unwrap_or_default()
}

/// What [`check`] should test.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Requirements {
    /// Fail on `l` concurrent lines.
    pub l: Option<usize>,
    /// Fail on a `(p+1)`-cup.
    pub p: Option<usize>,
    /// Fail on a `(q+1)`-cap.
    pub q: Option<usize>,
    /// Fail on `n` lines in convex position.
    pub no_convex: Option<usize>,
    /// Fail on four lines defining a 4-cell unbounded to these sides.
    pub unbounded: Vec<Side>,
    pub prune: Prune,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PropertyCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub family_size: usize,
    pub max_concurrency: ConcurrencyReport,
    pub longest_cup: ChainResult,
    pub longest_cap: ChainResult,
    /// `(n, first n-subset in convex position)` when a convex search ran.
    pub convex_subset: Option<(usize, Option<Vec<usize>>)>,
    /// Per queried side, the first 4-subset defining a 4-cell unbounded to it.
    pub unbounded_4: Vec<(Side, Option<Vec<usize>>)>,
    pub checks: Vec<PropertyCheck>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs every requested check and records the measured quantities.
pub fn check(family: &LineFamily, req: &Requirements) -> VerifyReport {
    let conc = max_concurrency(family);
    let cup = longest_cup(family);
    let cap = longest_cap(family);
    let mut checks = Vec::new();
    if let Some(l) = req.l {
        checks.push(PropertyCheck { name: format!("max_concurrency < {l}"), pass: conc.max_count < l });
    }
    if let Some(p) = req.p {
        checks.push(PropertyCheck { name: format!("longest_cup <= {p}"), pass: cup.size <= p });
    }
    if let Some(q) = req.q {
        checks.push(PropertyCheck { name: format!("longest_cap <= {q}"), pass: cap.size <= q });
    }
    let convex_subset = req.no_convex.map(|n| {
        let found = exists_n_convex(family, n, req.prune);
        checks.push(PropertyCheck { name: format!("no {n} lines in convex position"), pass: found.is_none() });
        (n, found)
    });
    let unbounded_4: Vec<_> = req
        .unbounded
        .iter()
        .map(|&side| {
            let found = subset_k_cell_unbounded(family, 4, side);
            checks.push(PropertyCheck { name: format!("no 4-cell unbounded {side}"), pass: found.is_none() });
            (side, found)
        })
        .collect();
    VerifyReport {
        family_size: family.len(),
        max_concurrency: conc,
        longest_cup: cup,
        longest_cap: cap,
        convex_subset,
        unbounded_4,
        checks,
    }
}

/// Checks for `F_{p,q}^l`: fewer than `l` concurrent lines, no `(p+1)`-cup,
/// no `(q+1)`-cap and no 4-subset defining a 4-cell unbounded to any side in
/// `sides`.
pub fn verify_properties(family: &LineFamily, l: usize, p: usize, q: usize, sides: &[Side]) -> Result<VerifyReport> {
    if l < 3 || p < 2 || q < 2 {
        return Err(Error::ParameterRange(format!("need l >= 3 and p, q >= 2 (got l={l}, p={p}, q={q})")));
    }
    let req = Requirements {
        l: Some(l),
        p: Some(p),
        q: Some(q),
        unbounded: sides.to_vec(),
        ..Requirements::default()
    };
    Ok(check(family, &req))
}

fn join(ix: &[usize]) -> String {
    ix.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family_size: {}", self.family_size)?;
        write!(f, "max_concurrency: {}", self.max_concurrency.max_count)?;
        if let Some(p) = &self.max_concurrency.point {
            write!(f, " at {p} lines {}", join(&self.max_concurrency.lines))?;
        }
        writeln!(f)?;
        writeln!(f, "longest_cup: {} lines {}", self.longest_cup.size, join(&self.longest_cup.witness))?;
        writeln!(f, "longest_cap: {} lines {}", self.longest_cap.size, join(&self.longest_cap.witness))?;
        if let Some((n, found)) = &self.convex_subset {
            match found {
                Some(s) => writeln!(f, "convex_{n}: lines {}", join(s))?,
                None => writeln!(f, "convex_{n}: none")?,
            }
        }
        for (side, found) in &self.unbounded_4 {
            match found {
                Some(s) => writeln!(f, "unbounded_{side}_4: lines {}", join(s))?,
                None => writeln!(f, "unbounded_{side}_4: none")?,
            }
        }
        for c in &self.checks {
            writeln!(f, "check {}: {}", c.name, if c.pass { "pass" } else { "FAIL" })?;
        }
        writeln!(f, "result: {}", if self.pass() { "pass" } else { "FAIL" })
    }
}

/// The absolute constant of the upper bound, at least 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundsParams {
    c: Rat,
}

impl BoundsParams {
    pub fn new(c: Rat) -> Result<BoundsParams> {
        if c < Rat::one() {
            return Err(Error::ParameterRange(format!("c must be at least 1, got {c}")));
        }
        Ok(BoundsParams { c })
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }
}

impl Default for BoundsParams {
    fn default() -> BoundsParams {
        BoundsParams { c: Rat::one() }
    }
}

pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn rat_of(n: BigInt) -> Rat {
    Rat::from_bigints(n, BigInt::one()).expect("unit denominator")
}

/// The lower bound for `ES_l(l, n)` from the doubled construction, with
/// `n = 2k + 2` (even) or `n = 2k + 1` (odd). The true value exceeds the
/// returned number.
///
/// ```
/// use convex_lines::verify::lower_bound_value;
/// assert_eq!(lower_bound_value(3, 6).unwrap(), 8);
/// assert_eq!(lower_bound_value(3, 5).unwrap(), 6);
/// assert_eq!(lower_bound_value(4, 5).unwrap(), 7);
/// ```
pub fn lower_bound_value(l: usize, n: usize) -> Result<u128> {
    if l < 3 || n < 5 {
        return Err(Error::ParameterRange(format!("need l >= 3 and n >= 5 (got l={l}, n={n})")));
    }
    let (l, n) = (l as u64, n as u64);
    let b = |a: u64, b: u64| binomial_big(a, b);
    let v = if n % 2 == 0 {
        let k = (n - 2) / 2;
        let big = b(2 * k - 2, k - 1);
        BigInt::from(l - 1) * &big * &big - BigInt::from(l - 3) * b(2 * k - 4, k - 2) * &big
    } else {
        let k = (n - 1) / 2;
        let big = b(2 * k - 2, k - 1);
        BigInt::from(l - 1) * (&big + 1) * b(2 * k - 3, k - 1) - BigInt::from(l - 3) * b(2 * k - 4, k - 2) * &big
    };
    v.to_u128().ok_or_else(|| Error::ParameterRange("lower bound does not fit in 128 bits".into()))
}

/// `c·(n + l − 1)·C(2n − 4, n − 2)`.
///
/// ```
/// use convex_lines::{verify::{upper_bound_value, BoundsParams}, Rat};
/// assert_eq!(upper_bound_value(3, 5, &BoundsParams::default()).unwrap(), Rat::from_int(140));
/// ```
pub fn upper_bound_value(l: usize, n: usize, params: &BoundsParams) -> Result<Rat> {
    if l < 3 || n < 3 {
        return Err(Error::ParameterRange(format!("need l, n >= 3 (got l={l}, n={n})")));
    }
    let (l, n) = (l as u64, n as u64);
    let v = BigInt::from(n + l - 1) * binomial_big(2 * n - 4, n - 2);
    Ok(params.c() * &rat_of(v))
}

/// `c·(min(p − 1, q − 1) + l)·C(p + q − 4, q − 2)`.
pub fn f_l_bound(l: usize, p: usize, q: usize, params: &BoundsParams) -> Result<Rat> {
    if l < 3 || p < 3 || q < 3 {
        return Err(Error::ParameterRange(format!("need l, p, q >= 3 (got l={l}, p={p}, q={q})")));
    }
    let (l, p, q) = (l as u64, p as u64, q as u64);
    let v = BigInt::from((p - 1).min(q - 1) + l) * binomial_big(p + q - 4, q - 2);
    Ok(params.c() * &rat_of(v))
}

/// `ES_l(l, n)` where it is known: 2, `l` and `l + 1` for `n` = 2, 3, 4.
pub fn known_exact(l: usize, n: usize) -> Option<usize> {
    if l < 3 {
        return None;
    }
    match n {
        2 => Some(2),
        3 => Some(l),
        4 => Some(l + 1),
        _ => None,
    }
}
