//! Exact geodesics, horocycles and hypercycles in the upper half-plane.
//!
//! Curves are generalized circles with canonical integer coefficients, so
//! intersection counts, tangency and disjointness are decided without
//! rounding. Isometries are rational matrices with an orientation flag.
//!
//! ```
//! use hyperk::predicates::intersection_pattern;
//! use hyperk::{make_horocycle, q, qi, BoundaryPoint};
//!
//! let a = make_horocycle(&BoundaryPoint::Finite(qi(0)), &q(1, 2)).unwrap();
//! let b = make_horocycle(&BoundaryPoint::Finite(qi(1)), &q(1, 2)).unwrap();
//! assert!(intersection_pattern(&a, &b).tangent);
//! ```

pub mod constructions;
pub mod earthquake;
pub mod error;
pub mod graphs;
pub mod model;
pub mod predicates;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
pub use model::*;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/intro.md")]
pub struct BookIntro;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/model.md")]
pub struct BookModel;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/predicates.md")]
pub struct BookPredicates;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/constructions.md")]
pub struct BookConstructions;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/earthquake.md")]
pub struct BookEarthquake;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/graphs.md")]
pub struct BookGraphs;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub struct BookCli;
