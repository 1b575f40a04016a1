use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::number::{fmt_rational, parse_rational, to_f64, Quad, Rational};

/// A point of the ideal boundary `ℝ ∪ {∞}`.
///
/// Rational points are the common case. Endpoints of a curve with rational
/// coefficients may be quadratic irrationals; those are carried exactly as
/// [`BoundaryPoint::Algebraic`] (never with a rational value).
///
/// The derived order is the linear order of `ℝ` with `∞` placed last, which
/// is a cut of the boundary circle and therefore induces its cyclic order.
#[derive(Clone, Debug)]
pub enum BoundaryPoint {
    Finite(Rational),
    Algebraic(Quad),
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(x: Rational) -> Self {
        BoundaryPoint::Finite(x)
    }

    pub fn from_quad(x: Quad) -> Self {
        if x.is_rational() {
            BoundaryPoint::Finite(x.a)
        } else {
            BoundaryPoint::Algebraic(x)
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            BoundaryPoint::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// The value as an element of a quadratic field, `None` for `∞`.
    pub fn as_quad(&self) -> Option<Quad> {
        match self {
            BoundaryPoint::Finite(x) => Some(Quad::rational(x.clone())),
            BoundaryPoint::Algebraic(x) => Some(x.clone()),
            BoundaryPoint::Infinity => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            BoundaryPoint::Finite(x) => to_f64(x),
            BoundaryPoint::Algebraic(x) => x.to_f64(),
            BoundaryPoint::Infinity => f64::INFINITY,
        }
    }

    /// Parses `inf`, `∞`, an integer or `p/q`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "inf" | "infinity" | "Infinity" | "∞" | "oo" => Ok(BoundaryPoint::Infinity),
            _ => parse_rational(t)
                .map(BoundaryPoint::Finite)
                .map_err(|_| Error::Parse(format!("not a boundary point: {t:?}"))),
        }
    }
}

impl From<Rational> for BoundaryPoint {
    fn from(x: Rational) -> Self {
        BoundaryPoint::Finite(x)
    }
}

impl PartialEq for BoundaryPoint {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BoundaryPoint {}

impl PartialOrd for BoundaryPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BoundaryPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use BoundaryPoint::*;
        match (self, other) {
            (Infinity, Infinity) => Ordering::Equal,
            (Infinity, _) => Ordering::Greater,
            (_, Infinity) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
            (x, y) => x.as_quad().unwrap().cmp(&y.as_quad().unwrap()),
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{}", fmt_rational(x)),
            BoundaryPoint::Algebraic(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// True when `x` lies on the open arc running from `start` to `end` in the
/// positive direction of the boundary circle.
pub fn on_open_arc(start: &BoundaryPoint, end: &BoundaryPoint, x: &BoundaryPoint) -> bool {
    match start.cmp(end) {
        Ordering::Less => start < x && x < end,
        Ordering::Greater => x > start || x < end,
        Ordering::Equal => x != start,
    }
}

/// True when the sequence is strictly increasing in the cyclic order of the
/// boundary circle (some rotation of it is increasing in the linear order).
pub fn is_cyclically_increasing(points: &[BoundaryPoint]) -> bool {
    let n = points.len();
    if n < 3 {
        return points.len() < 2 || points[0] != points[1];
    }
    let mut descents = 0;
    for i in 0..n {
        match points[i].cmp(&points[(i + 1) % n]) {
            Ordering::Less => {}
            Ordering::Greater => descents += 1,
            Ordering::Equal => return false,
        }
    }
    descents == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::number::{q, qi};

    #[test]
    fn infinity_is_last() {
        let a = BoundaryPoint::Finite(qi(10));
        assert!(a < BoundaryPoint::Infinity);
        assert_eq!(
            BoundaryPoint::parse("inf").unwrap(),
            BoundaryPoint::Infinity
        );
        assert_eq!(
            BoundaryPoint::parse("-1/2").unwrap(),
            BoundaryPoint::Finite(q(-1, 2))
        );
        assert!(BoundaryPoint::parse("x").is_err());
    }

    #[test]
    fn algebraic_points_compare_with_rationals() {
        let sqrt2 = BoundaryPoint::from_quad(Quad::new(qi(0), qi(1), qi(2)));
        assert!(BoundaryPoint::Finite(q(141, 100)) < sqrt2);
        assert!(sqrt2 < BoundaryPoint::Finite(q(142, 100)));
        let folded = BoundaryPoint::from_quad(Quad::new(qi(1), qi(1), qi(4)));
        assert!(matches!(folded, BoundaryPoint::Finite(_)));
    }

    #[test]
    fn arcs_and_cyclic_order() {
        let p = |n: i64| BoundaryPoint::Finite(qi(n));
        let inf = BoundaryPoint::Infinity;
        assert!(on_open_arc(&p(0), &p(2), &p(1)));
        assert!(!on_open_arc(&p(0), &p(2), &inf));
        assert!(on_open_arc(&p(2), &p(0), &inf));
        assert!(on_open_arc(&p(2), &p(0), &p(-5)));
        assert!(is_cyclically_increasing(&[p(-1), p(0), p(1), inf.clone()]));
        assert!(is_cyclically_increasing(&[p(1), inf.clone(), p(-1), p(0)]));
        assert!(!is_cyclically_increasing(&[p(0), p(2), p(1), p(3)]));
    }
}
