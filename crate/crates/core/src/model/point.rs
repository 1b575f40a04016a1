use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};
use crate::model::number::{fmt_rational, to_f64, Rational};

/// A point `x + iy` of the open upper half-plane.
///
/// Exact points carry rational coordinates and every predicate evaluated on
/// them is exact. Approximate points come from square roots (intersection
/// coordinates) or from transcendental families.
#[derive(Clone, Debug, PartialEq)]
pub enum UhpPoint {
    Exact { x: Rational, y: Rational },
    Approx { x: f64, y: f64 },
}

impl UhpPoint {
    pub fn exact(x: Rational, y: Rational) -> Result<Self> {
        if !y.is_positive() {
            return invalid(format!(
                "point {} + {}i is not in the upper half-plane",
                x, y
            ));
        }
        Ok(UhpPoint::Exact { x, y })
    }

    pub fn approx(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return invalid(format!("point {x} + {y}i is not in the upper half-plane"));
        }
        Ok(UhpPoint::Approx { x, y })
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, UhpPoint::Exact { .. })
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            UhpPoint::Exact { x, y } => Some((x, y)),
            UhpPoint::Approx { .. } => None,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        match self {
            UhpPoint::Exact { x, y } => (to_f64(x), to_f64(y)),
            UhpPoint::Approx { x, y } => (*x, *y),
        }
    }

    /// Hyperbolic distance between two points.
    pub fn distance(&self, other: &UhpPoint) -> f64 {
        let (x1, y1) = self.to_f64();
        let (x2, y2) = other.to_f64();
        let num = (x1 - x2).powi(2) + (y1 - y2).powi(2);
        (1.0 + num / (2.0 * y1 * y2)).acosh()
    }
}

impl fmt::Display for UhpPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UhpPoint::Exact { x, y } => {
                if x.is_zero() {
                    write!(f, "{}i", fmt_rational(y))
                } else {
                    write!(f, "{} + {}i", fmt_rational(x), fmt_rational(y))
                }
            }
            UhpPoint::Approx { x, y } => write!(f, "{x:.9} + {y:.9}i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::number::{q, qi};

    #[test]
    fn rejects_boundary_and_lower_half() {
        assert!(UhpPoint::exact(qi(0), qi(0)).is_err());
        assert!(UhpPoint::exact(qi(0), qi(-1)).is_err());
        assert!(UhpPoint::approx(0.0, f64::NAN).is_err());
        let p = UhpPoint::exact(q(1, 2), qi(1)).unwrap();
        assert_eq!(p.to_string(), "1/2 + 1i");
    }

    #[test]
    fn distance_along_imaginary_axis_is_log_ratio() {
        let a = UhpPoint::exact(qi(0), qi(1)).unwrap();
        let b = UhpPoint::exact(qi(0), qi(5)).unwrap();
        assert!((a.distance(&b) - 5f64.ln()).abs() < 1e-12);
    }
}
