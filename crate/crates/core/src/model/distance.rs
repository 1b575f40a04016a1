//! Distance to a geodesic and the hypercycles at constant distance from it.
//!
//! For a geodesic `a(x² + y²) + bx + d = 0` with `D = b² − 4ad`, a point
//! `x + iy` is at distance `δ` where
//!
//! ```text
//! sinh δ = |a(x² + y²) + bx + d| / (y √D)
//! ```
//!
//! so the two hypercycles at distance `δ` are `(a, b, ∓ √D sinh δ, d)`.

use num_traits::{Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::model::circle::{ApproxCircle, GeneralizedCircle};
use crate::model::curve::{Curve, CurveKind};
use crate::model::number::{rational_sqrt, to_f64, Rational};
use crate::model::point::UhpPoint;

/// The two boundary hypercycles of a crescent.
///
/// `first` lies on the side where `a(x² + y²) + bx + d > 0` (to the right of
/// `x = 0` for the imaginary axis), `second` on the other side.
#[derive(Clone, Debug, PartialEq)]
pub struct Crescent<C> {
    pub first: C,
    pub second: C,
    /// Set for distance zero, where both sides collapse to the geodesic.
    pub degenerate: bool,
}

fn require_geodesic(g: &Curve) -> Result<()> {
    if g.kind() != CurveKind::Geodesic {
        return invalid(format!("expected a geodesic, got {}", g.kind()));
    }
    Ok(())
}

/// Hyperbolic distance from `z` to the geodesic `g`.
pub fn distance_to_geodesic(z: &UhpPoint, g: &Curve) -> Result<f64> {
    require_geodesic(g)?;
    let c = g.circle();
    let disc = to_f64(&Rational::from_integer(c.boundary_discriminant()));
    let s = match z {
        UhpPoint::Exact { x, y } => to_f64(&(c.eval(x, y).abs() / y)) / disc.sqrt(),
        UhpPoint::Approx { x, y } => {
            let v = c.to_approx().eval(*x, *y);
            v.abs() / (y * disc.sqrt())
        }
    };
    Ok(s.asinh())
}

/// Floating crescent of width `d` around `g`.
pub fn equidistant_pair(g: &Curve, d: f64) -> Result<Crescent<ApproxCircle>> {
    require_geodesic(g)?;
    if !(d >= 0.0) || !d.is_finite() {
        return invalid(format!("distance {d} must be finite and nonnegative"));
    }
    let base = g.circle().to_approx();
    if d == 0.0 {
        return Ok(Crescent {
            first: base,
            second: base,
            degenerate: true,
        });
    }
    let root = to_f64(&Rational::from_integer(g.circle().boundary_discriminant())).sqrt();
    let k = root * d.sinh();
    let side = |sign: f64| ApproxCircle::new(base.a, base.b, sign * k, base.d);
    Ok(Crescent {
        first: side(-1.0),
        second: side(1.0),
        degenerate: false,
    })
}

/// Exact crescent around `g`, parametrized by `sinh δ`.
///
/// Needs `√D · sinh δ` rational, which holds for instance when `D` is a
/// perfect square (every geodesic with rational endpoints).
pub fn equidistant_pair_exact(g: &Curve, sinh_d: &Rational) -> Result<Crescent<Curve>> {
    require_geodesic(g)?;
    if sinh_d.is_negative() {
        return invalid(format!("sinh of a distance cannot be negative: {sinh_d}"));
    }
    if sinh_d.is_zero() {
        return Ok(Crescent {
            first: g.clone(),
            second: g.clone(),
            degenerate: true,
        });
    }
    let disc = Rational::from_integer(g.circle().boundary_discriminant());
    let root = rational_sqrt(&disc).ok_or_else(|| {
        Error::InvalidInput(format!("geodesic {} has irrational endpoints", g.circle()))
    })?;
    let [a, b, _, d] = g.circle().coeffs();
    let k = root * sinh_d;
    let side = |c: Rational| -> Result<Curve> {
        Curve::from_circle(GeneralizedCircle::new(a.clone(), b.clone(), c, d.clone())?)
    };
    Ok(Crescent {
        first: side(-k.clone())?,
        second: side(k)?,
        degenerate: false,
    })
}

/// The generalized circle through two real-axis points and an interior point,
/// in floating arithmetic. `f64::INFINITY` stands for `∞`.
pub fn hypercycle_through_approx(p: f64, q: f64, x: f64, y: f64) -> Result<ApproxCircle> {
    if p == q || !(y > 0.0) {
        return invalid("hypercycle needs distinct endpoints and an interior point");
    }
    let c = if p.is_infinite() || q.is_infinite() {
        let s = if p.is_infinite() { q } else { p };
        ApproxCircle::new(0.0, y, s - x, -y * s)
    } else {
        let cc = -((x * x + y * y) - (p + q) * x + p * q) / y;
        ApproxCircle::new(1.0, -(p + q), cc, p * q)
    };
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::boundary::BoundaryPoint;
    use crate::model::curve::make_geodesic;
    use crate::model::isometry::two_point_normalizer_f64;
    use crate::model::number::qi;

    fn bp(n: i64) -> BoundaryPoint {
        BoundaryPoint::Finite(qi(n))
    }

    // independent oracle: move the geodesic to the imaginary axis, then
    // sinh δ = |x|/y
    fn oracle(p: f64, q: f64, x: f64, y: f64) -> f64 {
        let (u, v) = two_point_normalizer_f64(p, q).apply(x, y);
        (u.abs() / v).asinh()
    }

    #[test]
    fn distance_examples() {
        let axis = make_geodesic(&bp(0), &BoundaryPoint::Infinity).unwrap();
        let d = distance_to_geodesic(&UhpPoint::exact(qi(1), qi(1)).unwrap(), &axis).unwrap();
        assert!((d - 0.881373587).abs() < 1e-9);
        let d = distance_to_geodesic(&UhpPoint::exact(qi(0), qi(5)).unwrap(), &axis).unwrap();
        assert_eq!(d, 0.0);
        let unit = make_geodesic(&bp(-1), &bp(1)).unwrap();
        let d = distance_to_geodesic(&UhpPoint::exact(qi(0), qi(1)).unwrap(), &unit).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn crescent_around_the_imaginary_axis() {
        let axis = make_geodesic(&bp(0), &BoundaryPoint::Infinity).unwrap();
        let exact = equidistant_pair_exact(&axis, &qi(1)).unwrap();
        assert_eq!(exact.first, Curve::from_ints(0, 1, -1, 0).unwrap());
        assert_eq!(exact.second, Curve::from_ints(0, 1, 1, 0).unwrap());

        let d = 1f64.asinh();
        let pair = equidistant_pair(&axis, d).unwrap();
        for c in [pair.first, pair.second] {
            for (x, y) in c.sample(100) {
                assert!((oracle(0.0, f64::INFINITY, x, y) - d).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn crescent_around_the_unit_geodesic() {
        let unit = make_geodesic(&bp(-1), &bp(1)).unwrap();
        let d = 1f64.asinh();
        let pair = equidistant_pair(&unit, d).unwrap();
        for c in [pair.first, pair.second] {
            let ends = c.boundary_points(1e-12);
            assert!((ends[0] + 1.0).abs() < 1e-12 && (ends[1] - 1.0).abs() < 1e-12);
            for (x, y) in c.sample(100) {
                assert!((oracle(-1.0, 1.0, x, y) - d).abs() < 1e-9);
                let z = UhpPoint::approx(x, y).unwrap();
                assert!((distance_to_geodesic(&z, &unit).unwrap() - d).abs() < 1e-9);
            }
        }
        // symmetric about the imaginary axis: both are reflections of each other
        assert_eq!(pair.first.b, 0.0);
        let exact = equidistant_pair_exact(&unit, &qi(1)).unwrap();
        assert_eq!(exact.first.kind(), CurveKind::Hypercycle);
    }

    #[test]
    fn zero_distance_is_degenerate() {
        let axis = make_geodesic(&bp(0), &BoundaryPoint::Infinity).unwrap();
        let pair = equidistant_pair(&axis, 0.0).unwrap();
        assert!(pair.degenerate);
        assert_eq!(pair.first, axis.circle().to_approx());
        let tiny = equidistant_pair(&axis, 1e-12).unwrap();
        assert!(tiny.first.coefficient_distance(&axis.circle().to_approx()) < 1e-11);
    }
}
