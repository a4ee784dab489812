//! SVG rendering of arrangements.
//!
//! All clipping is exact; coordinates are rounded to 12 significant digits
//! only when written out. The y-axis points up: the document's `viewBox` is
//! the viewport mirrored vertically, so the file contains `(x, -y)`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::arrangement::{Arrangement, SignVector};
use crate::error::{Error, Result};
use crate::geom::{side_of, Line, LineFamily, Point};
use crate::rat::Rat;

/// An axis-aligned box `[x0, x1] × [y0, y1]` with positive width and height.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Viewport {
    pub x0: Rat,
    pub y0: Rat,
    pub x1: Rat,
    pub y1: Rat,
}

impl Viewport {
    pub fn new(x0: Rat, y0: Rat, x1: Rat, y1: Rat) -> Result<Viewport> {
        if x0 >= x1 || y0 >= y1 {
            return Err(Error::ParameterRange("viewport needs x0 < x1 and y0 < y1".into()));
        }
        Ok(Viewport { x0, y0, x1, y1 })
    }

    /// The box around every pairwise intersection, widened by 10% of its
    /// extent on each side. Degenerate extents fall back to a unit margin.
    pub fn auto(family: &LineFamily) -> Viewport {
        let verts = family.vertices();
        let (mut x0, mut x1, mut y0, mut y1) = match verts.first() {
            Some(p) => (p.x.clone(), p.x.clone(), p.y.clone(), p.y.clone()),
            None => {
                let c = family.iter().next().map(|l| l.c.clone()).unwrap_or_else(Rat::zero);
                (Rat::zero(), Rat::zero(), c.clone(), c)
            }
        };
        for p in &verts {
            x0 = x0.min(p.x.clone());
            x1 = x1.max(p.x.clone());
            y0 = y0.min(p.y.clone());
            y1 = y1.max(p.y.clone());
        }
        let margin = |lo: &Rat, hi: &Rat| {
            let w = hi - lo;
            if w.is_zero() { Rat::one() } else { w / Rat::from_int(10) }
        };
        let (mx, my) = (margin(&x0, &x1), margin(&y0, &y1));
        Viewport { x0: x0 - &mx, x1: x1 + &mx, y0: y0 - &my, y1: y1 + &my }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.x0 <= p.x && p.x <= self.x1 && self.y0 <= p.y && p.y <= self.y1
    }

    fn corners(&self) -> Vec<Point> {
        vec![
            Point::new(self.x0.clone(), self.y0.clone()),
            Point::new(self.x1.clone(), self.y0.clone()),
            Point::new(self.x1.clone(), self.y1.clone()),
            Point::new(self.x0.clone(), self.y1.clone()),
        ]
    }
}

impl FromStr for Viewport {
    type Err = Error;

    /// `x0,y0,x1,y1` as rational literals.
    fn from_str(s: &str) -> Result<Viewport> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::ParameterRange(format!("viewport must be x0,y0,x1,y1, got {s:?}")));
        }
        let v: Vec<Rat> = parts.iter().map(|p| p.parse()).collect::<Result<_>>()?;
        let [x0, y0, x1, y1]: [Rat; 4] = v.try_into().expect("four parts");
        Viewport::new(x0, y0, x1, y1)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Highlight {
    /// A cell of the whole arrangement.
    Cell(SignVector),
    /// A cell of the sub-arrangement on these lines that all of them bound.
    Subset(Vec<usize>),
}

#[derive(Clone, PartialEq, Debug)]
pub struct RenderOptions {
    /// `None` picks [`Viewport::auto`].
    pub viewport: Option<Viewport>,
    pub highlight: Option<Highlight>,
    /// Document width in pixels; the height follows the viewport's aspect ratio.
    pub width: u32,
    /// Stroke width as a fraction of the viewport width.
    pub stroke: f64,
    pub fill: String,
    /// Draw a dot where three or more lines meet.
    pub mark_concurrency: bool,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions {
            viewport: None,
            highlight: None,
            width: 600,
            stroke: 0.004,
            fill: "#c8c8c8".into(),
            mark_concurrency: true,
        }
    }
}

/// Decimal form with 12 significant digits.
pub fn fmt_num(v: f64) -> String {
    let rounded: f64 = format!("{v:.11e}").parse().expect("valid float");
    if rounded == 0.0 { "0".into() } else { format!("{rounded}") }
}

fn fmt_rat(r: &Rat) -> String {
    fmt_num(r.to_f64())
}

/// The part of `line` inside `vp`, if it has positive length.
pub fn clip_line(line: &Line, vp: &Viewport) -> Option<(Point, Point)> {
    let (mut lo, mut hi) = (vp.x0.clone(), vp.x1.clone());
    if line.m.is_zero() {
        if line.c <= vp.y0 || line.c >= vp.y1 {
            return None;
        }
    } else {
        let a = (&vp.y0 - &line.c) / &line.m;
        let b = (&vp.y1 - &line.c) / &line.m;
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        lo = lo.max(a);
        hi = hi.min(b);
    }
    if lo >= hi {
        return None;
    }
    let p = Point::new(lo.clone(), line.eval(&lo));
    let q = Point::new(hi.clone(), line.eval(&hi));
    Some((p, q))
}

/// Sutherland–Hodgman: keep the part of a convex polygon where
/// `sign · (y − m·x − c) >= 0`.
fn clip_halfplane(poly: &[Point], line: &Line, sign: i8) -> Vec<Point> {
    let inside = |p: &Point| side_of(line, p) * sign >= 0;
    let mut out = Vec::new();
    for (i, cur) in poly.iter().enumerate() {
        let prev = &poly[(i + poly.len() - 1) % poly.len()];
        let (pi, ci) = (inside(prev), inside(cur));
        if pi != ci {
            // crossing point of segment prev→cur with the line
            let fp = &prev.y - line.eval(&prev.x);
            let fc = &cur.y - line.eval(&cur.x);
            let t = &fp / &(&fp - &fc);
            out.push(Point::new(&prev.x + &(&t * &(&cur.x - &prev.x)), &prev.y + &(&t * &(&cur.y - &prev.y))));
        }
        if ci {
            out.push(cur.clone());
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// The highlighted cell clipped to the viewport, as an exact convex polygon
/// (counter-clockwise). Empty when the cell misses the viewport.
pub fn cell_polygon(family: &LineFamily, highlight: &Highlight, vp: &Viewport) -> Result<Vec<Point>> {
    let (indices, signs): (Vec<usize>, Vec<i8>) = match highlight {
        Highlight::Cell(v) => {
            Arrangement::new(family).cell(v)?;
            ((0..family.len()).collect(), v.0.clone())
        }
        Highlight::Subset(s) => {
            if let Some(&bad) = s.iter().find(|&&i| i >= family.len()) {
                return Err(Error::ParameterRange(format!("line index {bad} out of range")));
            }
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            let signs = Arrangement::new(family)
                .subset_convex_position(&s)
                .ok_or(Error::InfeasibleSignVector)?;
            (s, signs)
        }
    };
    let mut poly = vp.corners();
    for (&i, &sg) in indices.iter().zip(&signs) {
        poly = clip_halfplane(&poly, family.get(i), sg);
        if poly.is_empty() {
            break;
        }
    }
    Ok(if poly.len() >= 3 { poly } else { Vec::new() })
}

/// Renders the family as an SVG 1.1 document: one `<path>` per line that
/// crosses the viewport, an optional filled `<polygon>` for the highlighted
/// cell, and optional dots at points where three or more lines meet.
pub fn render_svg(family: &LineFamily, opts: &RenderOptions) -> Result<String> {
    if family.is_empty() {
        return Err(Error::ParameterRange("nothing to render".into()));
    }
    let vp = opts.viewport.clone().unwrap_or_else(|| Viewport::auto(family));
    let segments: Vec<(usize, (Point, Point))> = family
        .iter()
        .enumerate()
        .filter_map(|(i, l)| clip_line(l, &vp).map(|s| (i, s)))
        .collect();
    if segments.is_empty() {
        return Err(Error::EmptyViewport);
    }
    let w = (&vp.x1 - &vp.x0).to_f64();
    let h = (&vp.y1 - &vp.y0).to_f64();
    let height = f64::from(opts.width) * h / w;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        opts.width,
        fmt_num(height),
        fmt_rat(&vp.x0),
        fmt_rat(&-&vp.y1),
        fmt_num(w),
        fmt_num(h)
    )
    .unwrap();
    if let Some(name) = family.name() {
        let escaped = name.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        writeln!(out, "<title>{escaped}</title>").unwrap();
    }
    if let Some(hl) = &opts.highlight {
        let poly = cell_polygon(family, hl, &vp)?;
        if !poly.is_empty() {
            let pts: Vec<String> = poly.iter().map(|p| format!("{},{}", fmt_rat(&p.x), fmt_rat(&-&p.y))).collect();
            writeln!(out, "<polygon class=\"cell\" fill=\"{}\" stroke=\"none\" points=\"{}\"/>", opts.fill, pts.join(" "))
                .unwrap();
        }
    }
    writeln!(out, "<g fill=\"none\" stroke=\"black\" stroke-width=\"{}\">", fmt_num(w * opts.stroke)).unwrap();
    for (i, (p, q)) in &segments {
        writeln!(
            out,
            "<path id=\"line-{i}\" d=\"M {} {} L {} {}\"/>",
            fmt_rat(&p.x),
            fmt_rat(&-&p.y),
            fmt_rat(&q.x),
            fmt_rat(&-&q.y)
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    if opts.mark_concurrency {
        let r = fmt_num(w * opts.stroke * 2.5);
        for (p, lines) in Arrangement::new(family).vertex_incidences() {
            if lines.len() >= 3 && vp.contains(&p) {
                writeln!(out, "<circle class=\"concurrent\" cx=\"{}\" cy=\"{}\" r=\"{r}\"/>", fmt_rat(&p.x), fmt_rat(&-&p.y))
                    .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> LineFamily {
        LineFamily::new(vec![Line::from_ints(1, 0), Line::from_ints(-1, 0), Line::from_ints(0, 1)]).unwrap()
    }

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.1), "0.1");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_num(-2.0), "-2");
        assert_eq!(fmt_num(123456789.123456789), "123456789.123");
        assert_eq!(fmt_num(-0.0), "0");
    }

    #[test]
    fn auto_viewport_margin() {
        let vp = Viewport::auto(&triangle());
        // intersections span [-1, 1] x [0, 1]
        assert_eq!(vp, Viewport::new(Rat::new(-6, 5), Rat::new(-1, 10), Rat::new(6, 5), Rat::new(11, 10)).unwrap());
    }

    #[test]
    fn triangle_cell_polygon() {
        let f = triangle();
        let vp = Viewport::auto(&f);
        // slope order: -x, 1, x; the bounded cell is above both diagonals and below y = 1
        let poly = cell_polygon(&f, &Highlight::Cell(SignVector(vec![1, -1, 1])), &vp).unwrap();
        let mut got = poly.clone();
        got.sort();
        assert_eq!(got, vec![Point::from_ints(-1, 1), Point::from_ints(0, 0), Point::from_ints(1, 1)]);
        let svg = render_svg(&f, &RenderOptions { highlight: Some(Highlight::Cell(SignVector(vec![1, -1, 1]))), ..Default::default() })
            .unwrap();
        assert_eq!(svg.matches("<path").count(), 3);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains("version=\"1.1\""));
    }

    #[test]
    fn single_line() {
        let f = LineFamily::new(vec![Line::from_ints(2, 1)]).unwrap();
        let svg = render_svg(&f, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(!svg.contains("<polygon"));
    }

    #[test]
    fn empty_viewport() {
        let vp: Viewport = "10,-1,11,1".parse().unwrap();
        let opts = RenderOptions { viewport: Some(vp), ..Default::default() };
        assert_eq!(render_svg(&triangle(), &opts), Err(Error::EmptyViewport));
        assert!("1,2,3".parse::<Viewport>().is_err());
        assert!("1,2,1,3".parse::<Viewport>().is_err());
    }
}
