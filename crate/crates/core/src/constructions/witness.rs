//! Disjoint witnesses for tangent hypercycle pairs.
//!
//! Given `h1` tangent to `h2` at `p` and points `x`, `y` of `h1` on either
//! side of `p`, a hypercycle through `x` and `y` missing `h2` is found in the
//! pencil of circles through `x` and `y` (their centers run along the
//! perpendicular bisector of `[x, y]`). When `h2` crosses `h1` instead, `h2`
//! separates `x` from `y` and no member of the pencil can miss it.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::model::circle::GeneralizedCircle;
use crate::model::curve::{Curve, CurveKind};
use crate::model::number::{qi, rational_near, to_f64, Rational};
use crate::model::point::UhpPoint;
use crate::predicates::pattern::intersection_pattern;

pub type RPoint = (Rational, Rational);

/// Compares two rational points of `c` by their position along the arc of
/// `c` inside the half-plane.
pub fn arc_cmp(c: &Curve, p1: &RPoint, p2: &RPoint) -> Ordering {
    let [a, b, cc, _] = c.circle().coeffs();
    if a.is_zero() {
        return if cc.is_zero() {
            p1.1.cmp(&p2.1)
        } else {
            p1.0.cmp(&p2.0)
        };
    }
    let cx = -b / (qi(2) * &a);
    let cy = -cc / (qi(2) * &a);
    // angle measured counterclockwise from the downward direction, which the
    // arc never contains
    let w = |p: &RPoint| (-(&p.1 - &cy), &p.0 - &cx);
    let half = |v: &(Rational, Rational)| {
        if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
            0
        } else {
            1
        }
    };
    let (w1, w2) = (w(p1), w(p2));
    match half(&w1).cmp(&half(&w2)) {
        Ordering::Equal => {
            let cross = &w1.0 * &w2.1 - &w1.1 * &w2.0;
            Rational::zero().cmp(&cross)
        }
        o => o,
    }
}

/// The second point where the line through `base` with the given slope
/// (`None` for vertical) meets `c`, when it lies in the half-plane.
pub fn second_point(c: &Curve, base: &RPoint, slope: Option<&Rational>) -> Option<RPoint> {
    let [a, b, cc, _] = c.circle().coeffs();
    let (x0, y0) = base;
    let (dx, dy) = match slope {
        Some(m) => (qi(1), m.clone()),
        None => (qi(0), qi(1)),
    };
    // F(base + t·dir) = t·(∇F·dir) + a t² |dir|² with F(base) = 0
    let grad = (qi(2) * &a * x0 + &b) * &dx + (qi(2) * &a * y0 + &cc) * &dy;
    let quad = &a * (&dx * &dx + &dy * &dy);
    if quad.is_zero() {
        return None;
    }
    let t = -grad / quad;
    if t.is_zero() {
        return None;
    }
    let p = (x0 + &t * &dx, y0 + &t * &dy);
    p.1.is_positive().then_some(p)
}

/// A rational point on `c` (a circle through the rational point `base`)
/// within `tol` of `target`.
pub fn snap_to_curve(c: &Curve, base: &RPoint, target: (f64, f64), tol: f64) -> Option<RPoint> {
    let (bx, by) = (to_f64(&base.0), to_f64(&base.1));
    let (tx, ty) = target;
    if c.circle().a().is_zero() {
        // lines: project and round along the line
        let [_, b, cc, d] = c.circle().coeffs();
        for den in [1i64 << 10, 1 << 20, 1 << 30, 1 << 40] {
            let p = if cc.is_zero() {
                (-(&d / &b), rational_near(ty, den))
            } else {
                let x = rational_near(tx, den);
                let y = -(&b * &x + &d) / &cc;
                (x, y)
            };
            if p.1.is_positive() && (to_f64(&p.0) - tx).hypot(to_f64(&p.1) - ty) < tol {
                return Some(p);
            }
        }
        return None;
    }
    if (tx - bx).abs() < tol && (ty - by).abs() < tol {
        return None;
    }
    let m = (ty - by) / (tx - bx);
    for den in [1i64 << 8, 1 << 16, 1 << 24, 1 << 32, 1 << 40, 1 << 48] {
        let slope = if m.is_finite() {
            Some(rational_near(m, den))
        } else {
            None
        };
        if let Some(p) = second_point(c, base, slope.as_ref()) {
            if (to_f64(&p.0) - tx).hypot(to_f64(&p.1) - ty) < tol {
                return Some(p);
            }
        }
    }
    None
}

fn integer_coeffs(c: &GeneralizedCircle) -> [Rational; 4] {
    c.int_coeffs().map(|x| Rational::from_integer(x.clone()))
}

/// A second member of the pencil through `x` and `y`, distinct from `h1`.
fn pencil_partner(h1: &Curve, x: &RPoint, y: &RPoint) -> Result<[Rational; 4]> {
    let (px, py) = x;
    let (qx, qy) = y;
    // circle with diameter [x, y]
    let diam = GeneralizedCircle::new(qi(1), -(px + qx), -(py + qy), px * qx + py * qy)?;
    if diam != *h1.circle() {
        return Ok(integer_coeffs(&diam));
    }
    let line =
        GeneralizedCircle::new(qi(0), qy - py, -(qx - px), -(qy - py) * px + (qx - px) * py)?;
    Ok(integer_coeffs(&line))
}

fn max_abs(v: &[Rational; 4]) -> Rational {
    v.iter().map(|x| x.abs()).max().unwrap()
}

/// Pencil parameters tried by [`witness_search`]: `±2^-e` for `e` in
/// `0..=80`, then `±2^e` for `e` in `1..=20`.
fn pencil_steps() -> impl Iterator<Item = Rational> {
    let small = (0..=80usize).map(|e| Rational::new(BigInt::one(), BigInt::one() << e));
    let large = (1..=20usize).map(|e| Rational::from_integer(BigInt::one() << e));
    small.chain(large).flat_map(|v| [v.clone(), -v])
}

/// Searches the pencil through `x` and `y` for a hypercycle disjoint from
/// `h2`. `x` and `y` must be distinct rational points of `h1`.
pub fn witness_search(h1: &Curve, h2: &Curve, x: &RPoint, y: &RPoint) -> Result<Option<Curve>> {
    if x == y {
        return invalid("witness points coincide");
    }
    for p in [x, y] {
        if !h1.circle().eval(&p.0, &p.1).is_zero() || !p.1.is_positive() {
            return invalid(format!("({}, {}) is not on {h1}", p.0, p.1));
        }
    }
    let base = integer_coeffs(h1.circle());
    let partner = pencil_partner(h1, x, y)?;
    let scale = max_abs(&base) / max_abs(&partner);
    let fb: Vec<f64> = base.iter().map(to_f64).collect();
    let fp: Vec<f64> = partner.iter().map(to_f64).collect();
    let probes = h2.circle().to_approx().sample(256);
    for s in pencil_steps() {
        let k = &s * &scale;
        let kf = to_f64(&k);
        if clearly_crosses(
            &(0..4).map(|i| fb[i] + kf * fp[i]).collect::<Vec<_>>(),
            &probes,
        ) {
            continue;
        }
        let v: Vec<Rational> = (0..4).map(|i| &base[i] + &k * &partner[i]).collect();
        let circle =
            match GeneralizedCircle::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()) {
                Ok(c) => c,
                Err(_) => continue,
            };
        let cand = match Curve::from_circle(circle) {
            Ok(c) if c.kind() == CurveKind::Hypercycle => c,
            _ => continue,
        };
        if cand != *h2 && intersection_pattern(&cand, h2).is_disjoint() {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Whether the circle with coefficients `v` takes both signs, well above
/// rounding, at points of the other curve. Such a candidate meets it.
fn clearly_crosses(v: &[f64], probes: &[(f64, f64)]) -> bool {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !(n.is_finite() && n > 0.0) {
        return false;
    }
    let (mut pos, mut neg) = (false, false);
    for &(x, y) in probes {
        let w = 1.0 + x * x + y * y;
        let f = (v[0] * (x * x + y * y) + v[1] * x + v[2] * y + v[3]) / n;
        if f > 1e-7 * w {
            pos = true;
        } else if f < -1e-7 * w {
            neg = true;
        }
        if pos && neg {
            return true;
        }
    }
    false
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub curve: Curve,
    /// The rational points the witness passes through.
    pub through: [RPoint; 2],
    /// Set when approximate inputs were moved to nearby rational points.
    pub snapped: bool,
}

fn exact_or_snapped(h1: &Curve, p: &RPoint, z: &UhpPoint) -> Result<(RPoint, bool)> {
    match z {
        UhpPoint::Exact { x, y } => Ok(((x.clone(), y.clone()), false)),
        UhpPoint::Approx { x, y } => {
            let v = h1.circle().to_approx().eval(*x, *y);
            if v.abs() > 1e-9 * (1.0 + x * x + y * y) {
                return invalid(format!("{z} is not on {h1}"));
            }
            snap_to_curve(h1, p, (*x, *y), 1e-9)
                .map(|r| (r, true))
                .ok_or_else(|| Error::InvalidInput(format!("no rational point of {h1} near {z}")))
        }
    }
}

/// A hypercycle through `x` and `y` disjoint from `h2`, for `h1` tangent to
/// `h2` at a point between `x` and `y` on `h1`.
pub fn hyp1_witness(h1: &Curve, h2: &Curve, x: &UhpPoint, y: &UhpPoint) -> Result<Witness> {
    let pat = intersection_pattern(h1, h2);
    let p = pat
        .tangency_point()
        .ok_or_else(|| Error::InvalidInput(format!("{h1} and {h2} are not tangent")))?;
    let (xr, sx) = exact_or_snapped(h1, &p, x)?;
    let (yr, sy) = exact_or_snapped(h1, &p, y)?;
    let ox = arc_cmp(h1, &xr, &p);
    let oy = arc_cmp(h1, &yr, &p);
    if ox == Ordering::Equal || oy == Ordering::Equal || ox == oy {
        return invalid("x and y must lie on opposite sides of the tangency point");
    }
    match witness_search(h1, h2, &xr, &yr)? {
        Some(curve) => Ok(Witness {
            curve,
            through: [xr, yr],
            snapped: sx || sy,
        }),
        None => Err(Error::NoSolution(
            "no disjoint member in the witness pencil".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::number::q;

    fn type1() -> (Curve, Curve) {
        (
            Curve::from_coeffs(qi(1), qi(0), q(-3, 4), q(-1, 4)).unwrap(),
            Curve::from_ints(1, 0, 3, -4).unwrap(),
        )
    }

    #[test]
    fn arc_order_runs_along_the_curve() {
        let (inner, _) = type1();
        let top = (qi(0), qi(1));
        let right = second_point(&inner, &top, Some(&q(-1, 2))).unwrap();
        let left = second_point(&inner, &top, Some(&q(1, 2))).unwrap();
        assert!(right.0.is_positive() && left.0.is_negative());
        assert_ne!(arc_cmp(&inner, &right, &top), arc_cmp(&inner, &left, &top));
        let diag = Curve::from_ints(0, 1, -1, 0).unwrap();
        assert_eq!(
            arc_cmp(&diag, &(qi(1), qi(1)), &(qi(2), qi(2))),
            Ordering::Less
        );
    }

    #[test]
    fn witness_for_the_tangent_pair() {
        let (inner, outer) = type1();
        let yplus = (0.75 + (0.75f64 * 0.75 + 4.0 * 0.09).sqrt()) / 2.0;
        let x = UhpPoint::approx(0.4, yplus).unwrap();
        let y = UhpPoint::approx(-0.4, yplus).unwrap();
        let w = hyp1_witness(&inner, &outer, &x, &y).unwrap();
        assert!(w.snapped);
        assert_eq!(w.curve.kind(), CurveKind::Hypercycle);
        assert!(intersection_pattern(&w.curve, &outer).is_disjoint());
        for p in &w.through {
            assert!(w.curve.circle().eval(&p.0, &p.1).is_zero());
        }
        // the same with h1 and h2 exchanged: witness through points of the outer curve
        let top = (qi(0), qi(1));
        let a = second_point(&outer, &top, Some(&q(1, 3))).unwrap();
        let b = second_point(&outer, &top, Some(&q(-1, 3))).unwrap();
        let ex = |p: &RPoint| UhpPoint::exact(p.0.clone(), p.1.clone()).unwrap();
        let w = hyp1_witness(&outer, &inner, &ex(&a), &ex(&b)).unwrap();
        assert!(!w.snapped);
        assert!(intersection_pattern(&w.curve, &inner).is_disjoint());
    }

    #[test]
    fn crossing_pairs_have_no_witness() {
        let diag = Curve::from_ints(0, 1, -1, 0).unwrap();
        let c3 = Curve::from_ints(1, 0, -1, -1).unwrap();
        // crossing at (1, 1); points of the diagonal on both sides
        let found = witness_search(&diag, &c3, &(q(1, 2), q(1, 2)), &(qi(2), qi(2))).unwrap();
        assert!(found.is_none());
        let x = UhpPoint::exact(q(1, 2), q(1, 2)).unwrap();
        let y = UhpPoint::exact(qi(2), qi(2)).unwrap();
        assert!(matches!(
            hyp1_witness(&diag, &c3, &x, &y),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn same_side_points_are_rejected() {
        let (inner, outer) = type1();
        let top = (qi(0), qi(1));
        let a = second_point(&inner, &top, Some(&q(-1, 2))).unwrap();
        let b = second_point(&inner, &top, Some(&q(-1, 3))).unwrap();
        let ex = |p: &RPoint| UhpPoint::exact(p.0.clone(), p.1.clone()).unwrap();
        assert!(hyp1_witness(&inner, &outer, &ex(&a), &ex(&b)).is_err());
    }
}
