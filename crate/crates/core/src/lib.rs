//! Exact line arrangements and the extremal families of the line version of
//! the Erdős–Szekeres problem.
//!
//! A family of lines is in *nearly general position* when no two lines are
//! parallel and none is vertical; concurrency is allowed. Such a family is in
//! *convex position* when it defines a cell whose boundary contains a
//! positive-length segment of every line. `ES_l(l, n)` is the least `N` such
//! that every `N`-line family in nearly general position contains `l`
//! concurrent lines or `n` lines in convex position.
//!
//! This crate builds families that avoid both, and verifies them exhaustively
//! with exact rational arithmetic:
//!
//! * [`geom`]: rationals, points, lines and the point–line duality;
//! * [`arrangement`]: cells, bounding lines, boundedness classes, concurrency;
//! * [`chains`]: cups, caps and cells unbounded to the left or right;
//! * [`construct`]: pencils, contractions and the recursive constructions;
//! * [`verify`]: property reports, convex-subset search and the bound formulas;
//! * [`io`] and [`svg`]: the family text format and SVG rendering.
//!
//! ```
//! use convex_lines::{construct, verify};
//!
//! let family = construct::thm12(3, 6).unwrap();
//! assert!(family.len() >= verify::lower_bound_value(3, 6).unwrap() as usize);
//! assert!(verify::exists_n_convex(&family, 6, verify::Prune::Off).is_none());
//! ```

pub mod arrangement;
pub mod chains;
pub mod construct;
pub mod error;
pub mod geom;
pub mod io;
pub mod rat;
pub mod subsets;
pub mod svg;
pub mod verify;

pub use arrangement::{Arrangement, BoundClass, Cell, SignVector, Side};
pub use error::{Error, Result};
pub use geom::{Line, LineFamily, Point};
pub use rat::Rat;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/arrangements.md")]
    mod arrangements {}
    #[doc = include_str!("../../../book/src/chains.md")]
    mod chains {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/io.md")]
    mod io {}
}
