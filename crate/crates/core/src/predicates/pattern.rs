//! How two curves meet: exact counts, tangency and shared endpoints.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::model::circle::GeneralizedCircle;
use crate::model::curve::{Curve, CurveKind};
use crate::model::number::{qi, Quad, Rational};
use crate::model::point::UhpPoint;

/// A point whose coordinates live in a common quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadPoint {
    pub x: Quad,
    pub y: Quad,
}

impl QuadPoint {
    pub fn as_rational(&self) -> Option<(Rational, Rational)> {
        Some((self.x.as_rational()?.clone(), self.y.as_rational()?.clone()))
    }

    pub fn to_uhp(&self) -> UhpPoint {
        match self.as_rational() {
            Some((x, y)) => UhpPoint::Exact { x, y },
            None => UhpPoint::Approx {
                x: self.x.to_f64(),
                y: self.y.to_f64(),
            },
        }
    }
}

impl fmt::Display for QuadPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionPattern {
    /// The two curves coincide; every count below is zero.
    pub equal: bool,
    pub interior_count: u8,
    pub tangent: bool,
    pub shared_endpoints: u8,
    /// Interior intersection points, exact in `Q(√Δ)`.
    pub points: Vec<QuadPoint>,
}

impl IntersectionPattern {
    pub fn is_disjoint(&self) -> bool {
        !self.equal && self.interior_count == 0
    }

    pub fn interior_points(&self) -> Vec<UhpPoint> {
        self.points.iter().map(QuadPoint::to_uhp).collect()
    }

    /// The interior tangency point, always rational.
    pub fn tangency_point(&self) -> Option<(Rational, Rational)> {
        if self.tangent {
            self.points[0].as_rational()
        } else {
            None
        }
    }

    /// Short label: `equal`, `disjoint`, `tangent`, `crossing` or `double-crossing`.
    pub fn label(&self) -> &'static str {
        match (self.equal, self.interior_count, self.tangent) {
            (true, _, _) => "equal",
            (_, 0, _) => "disjoint",
            (_, 1, true) => "tangent",
            (_, 1, false) => "crossing",
            _ => "double-crossing",
        }
    }

    pub fn to_record(&self, pair_type: Option<HypercyclePairType>) -> PatternRecord {
        PatternRecord {
            interior_count: self.interior_count,
            tangent: self.tangent,
            shared_endpoints: self.shared_endpoints,
            r#type: pair_type
                .map(|t| t.name().to_string())
                .unwrap_or_else(|| self.label().to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRecord {
    pub interior_count: u8,
    pub tangent: bool,
    pub shared_endpoints: u8,
    pub r#type: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HypercyclePairType {
    Type1,
    Type2,
    Type3,
    Type4,
    Disjoint,
    SameEndpoints,
    Equal,
}

impl HypercyclePairType {
    pub fn name(self) -> &'static str {
        match self {
            HypercyclePairType::Type1 => "type1",
            HypercyclePairType::Type2 => "type2",
            HypercyclePairType::Type3 => "type3",
            HypercyclePairType::Type4 => "type4",
            HypercyclePairType::Disjoint => "disjoint",
            HypercyclePairType::SameEndpoints => "same-endpoints",
            HypercyclePairType::Equal => "equal",
        }
    }
}

impl fmt::Display for HypercyclePairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Real points of `C ∩ L` for a circle `C` (with `a ≠ 0`) and a line
/// `ux + vy + w = 0`, with multiplicity flag.
fn circle_line(
    c: &[Rational; 4],
    u: &Rational,
    v: &Rational,
    w: &Rational,
) -> (Vec<QuadPoint>, bool) {
    let [a, b, cc, d] = c;
    if !v.is_zero() {
        // y = −(ux + w)/v
        let qa = a * (v * v + u * u);
        let qb = qi(2) * a * u * w + b * v * v - cc * v * u;
        let qc = a * w * w - cc * v * w + d * v * v;
        let disc = &qb * &qb - qi(4) * &qa * &qc;
        if disc.is_negative() {
            return (vec![], false);
        }
        let mid = -(&qb) / (qi(2) * &qa);
        let half = Rational::from_integer(1.into()) / (qi(2) * &qa);
        let slope = -(u / v);
        let icpt = -(w / v);
        let mk = |sign: i64| {
            let x = Quad::new(mid.clone(), &half * qi(sign), disc.clone());
            let y = &(&x * &slope) + &icpt;
            QuadPoint { x, y }
        };
        if disc.is_zero() {
            (vec![mk(1)], true)
        } else {
            (vec![mk(-1), mk(1)], false)
        }
    } else {
        let x0 = -(w / u);
        let qc = a * &x0 * &x0 + b * &x0 + d;
        let disc = cc * cc - qi(4) * a * &qc;
        if disc.is_negative() {
            return (vec![], false);
        }
        let mid = -cc / (qi(2) * a);
        let half = Rational::from_integer(1.into()) / (qi(2) * a);
        let mk = |sign: i64| QuadPoint {
            x: Quad::rational(x0.clone()),
            y: Quad::new(mid.clone(), &half * qi(sign), disc.clone()),
        };
        if disc.is_zero() {
            (vec![mk(1)], true)
        } else {
            (vec![mk(-1), mk(1)], false)
        }
    }
}

/// All real intersection points of two distinct generalized circles, with a
/// flag for a double contact.
pub(crate) fn circle_points(
    c1: &GeneralizedCircle,
    c2: &GeneralizedCircle,
) -> (Vec<QuadPoint>, bool) {
    let p = c1.coeffs();
    let r = c2.coeffs();
    if p[0].is_zero() && r[0].is_zero() {
        let det = &p[1] * &r[2] - &r[1] * &p[2];
        if det.is_zero() {
            return (vec![], false);
        }
        let x = (&p[2] * &r[3] - &r[2] * &p[3]) / &det;
        let y = (&p[3] * &r[1] - &r[3] * &p[1]) / &det;
        return (
            vec![QuadPoint {
                x: Quad::rational(x),
                y: Quad::rational(y),
            }],
            false,
        );
    }
    let (circ, line) = if p[0].is_zero() {
        (r, p)
    } else if r[0].is_zero() {
        (p, r)
    } else {
        // radical axis a2·C1 − a1·C2
        let axis: Vec<Rational> = (0..4).map(|i| &r[0] * &p[i] - &p[0] * &r[i]).collect();
        (
            p,
            [
                axis[0].clone(),
                axis[1].clone(),
                axis[2].clone(),
                axis[3].clone(),
            ],
        )
    };
    let (u, v, w) = (&line[1], &line[2], &line[3]);
    if u.is_zero() && v.is_zero() {
        // concentric circles
        return (vec![], false);
    }
    circle_line(&circ, u, v, w)
}

/// Exact intersection pattern of two curves inside the open half-plane.
pub fn intersection_pattern(c1: &Curve, c2: &Curve) -> IntersectionPattern {
    if c1 == c2 {
        return IntersectionPattern {
            equal: true,
            interior_count: 0,
            tangent: false,
            shared_endpoints: c1.endpoints().len() as u8,
            points: vec![],
        };
    }
    let (pts, double) = circle_points(c1.circle(), c2.circle());
    let interior: Vec<QuadPoint> = pts
        .into_iter()
        .filter(|p| p.y.sign() == Ordering::Greater)
        .collect();
    let shared = c1
        .endpoints()
        .iter()
        .filter(|e| c2.endpoints().contains(e))
        .count() as u8;
    IntersectionPattern {
        equal: false,
        interior_count: interior.len() as u8,
        tangent: double && !interior.is_empty(),
        shared_endpoints: shared,
        points: interior,
    }
}

/// Reads the hypercycle type off an intersection pattern.
pub fn pair_type_of(p: &IntersectionPattern) -> HypercyclePairType {
    use HypercyclePairType::*;
    if p.equal {
        Equal
    } else if p.shared_endpoints == 2 {
        SameEndpoints
    } else if p.interior_count == 0 {
        Disjoint
    } else if p.tangent {
        Type1
    } else if p.interior_count == 2 {
        Type4
    } else if p.shared_endpoints == 1 {
        Type2
    } else {
        Type3
    }
}

pub fn hypercycle_pair_type(h1: &Curve, h2: &Curve) -> Result<HypercyclePairType> {
    for h in [h1, h2] {
        if h.kind() != CurveKind::Hypercycle {
            return invalid(format!("expected a hypercycle, got {h}"));
        }
    }
    Ok(pair_type_of(&intersection_pattern(h1, h2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::boundary::BoundaryPoint;
    use crate::model::curve::{make_geodesic, make_horocycle};
    use crate::model::number::q;

    fn bp(n: i64) -> BoundaryPoint {
        BoundaryPoint::Finite(qi(n))
    }

    fn horo(p: i64, r: Rational) -> Curve {
        make_horocycle(&bp(p), &r).unwrap()
    }

    // Euclidean oracle for circle pairs: compare center distance with radii
    fn euclid_count(c1: &Curve, c2: &Curve) -> Option<usize> {
        let ((x1, y1), r1) = c1.circle().to_approx().center_radius()?;
        let ((x2, y2), r2) = c2.circle().to_approx().center_radius()?;
        let dd = ((x1 - x2).powi(2) + (y1 - y2).powi(2)).sqrt();
        Some(
            if (dd - (r1 + r2)).abs() < 1e-12 || (dd - (r1 - r2).abs()).abs() < 1e-12 {
                1
            } else if dd < r1 + r2 && dd > (r1 - r2).abs() {
                2
            } else {
                0
            },
        )
    }

    #[test]
    fn tangent_horocycles() {
        let p = intersection_pattern(&horo(-1, qi(1)), &horo(1, qi(1)));
        assert_eq!(
            (p.interior_count, p.tangent, p.shared_endpoints),
            (1, true, 0)
        );
        assert_eq!(p.tangency_point(), Some((qi(0), qi(1))));
        assert_eq!(euclid_count(&horo(-1, qi(1)), &horo(1, qi(1))), Some(1));
    }

    #[test]
    fn horocycle_below_a_line() {
        let low = horo(0, q(1, 2));
        let line = make_horocycle(&BoundaryPoint::Infinity, &qi(2)).unwrap();
        let p = intersection_pattern(&low, &line);
        assert_eq!(
            (p.interior_count, p.tangent, p.shared_endpoints),
            (0, false, 0)
        );
        assert!(p.is_disjoint());
    }

    #[test]
    fn crossing_geodesics() {
        let g1 = make_geodesic(&bp(-1), &bp(1)).unwrap();
        let g2 = make_geodesic(&bp(0), &BoundaryPoint::Infinity).unwrap();
        let p = intersection_pattern(&g1, &g2);
        assert_eq!(p.interior_count, 1);
        assert_eq!(p.points[0].as_rational(), Some((qi(0), qi(1))));
        assert_eq!(p, intersection_pattern(&g2, &g1));
    }

    #[test]
    fn same_center_horocycles_share_their_endpoint() {
        let p = intersection_pattern(&horo(0, q(1, 2)), &horo(0, qi(1)));
        assert_eq!(
            (p.interior_count, p.tangent, p.shared_endpoints),
            (0, false, 1)
        );
        let a = make_horocycle(&BoundaryPoint::Infinity, &qi(1)).unwrap();
        let b = make_horocycle(&BoundaryPoint::Infinity, &qi(3)).unwrap();
        let p = intersection_pattern(&a, &b);
        assert_eq!((p.interior_count, p.shared_endpoints), (0, 1));
    }

    #[test]
    fn equal_curves_are_flagged() {
        let h = horo(0, q(1, 2));
        let p = intersection_pattern(&h, &h.clone());
        assert!(p.equal);
        assert_eq!(p.label(), "equal");
    }

    #[test]
    fn hypercycle_types() {
        let inner = Curve::from_coeffs(qi(1), qi(0), q(-3, 4), q(-1, 4)).unwrap();
        let outer = Curve::from_ints(1, 0, 3, -4).unwrap();
        assert_eq!(
            hypercycle_pair_type(&inner, &outer).unwrap(),
            HypercyclePairType::Type1
        );
        let p = intersection_pattern(&inner, &outer);
        assert_eq!(p.tangency_point(), Some((qi(0), qi(1))));

        let diag = Curve::from_ints(0, 1, -1, 0).unwrap();
        let c2 = Curve::from_coeffs(qi(1), qi(-2), q(-3, 2), qi(0)).unwrap();
        assert_eq!(
            hypercycle_pair_type(&diag, &c2).unwrap(),
            HypercyclePairType::Type2
        );
        let p = intersection_pattern(&diag, &c2);
        assert_eq!(p.points[0].as_rational(), Some((q(7, 4), q(7, 4))));

        let c3 = Curve::from_ints(1, 0, -1, -1).unwrap();
        assert_eq!(
            hypercycle_pair_type(&diag, &c3).unwrap(),
            HypercyclePairType::Type3
        );
        assert_eq!(
            intersection_pattern(&diag, &c3).points[0].as_rational(),
            Some((qi(1), qi(1)))
        );

        let c4 = Curve::from_ints(1, -4, -2, 3).unwrap();
        assert_eq!(
            hypercycle_pair_type(&diag, &c4).unwrap(),
            HypercyclePairType::Type4
        );
        let xs: Vec<f64> = intersection_pattern(&diag, &c4)
            .points
            .iter()
            .map(|p| p.x.to_f64())
            .collect();
        let s3 = 3f64.sqrt();
        assert!(
            (xs[0] - (3.0 - s3) / 2.0).abs() < 1e-12 && (xs[1] - (3.0 + s3) / 2.0).abs() < 1e-12
        );

        let steeper = Curve::from_ints(0, 2, -1, 0).unwrap();
        assert_eq!(
            hypercycle_pair_type(&diag, &steeper).unwrap(),
            HypercyclePairType::SameEndpoints
        );
        let geo = make_geodesic(&bp(0), &bp(1)).unwrap();
        assert!(hypercycle_pair_type(&diag, &geo).is_err());
    }

    #[test]
    fn records_serialize() {
        let inner = Curve::from_coeffs(qi(1), qi(0), q(-3, 4), q(-1, 4)).unwrap();
        let outer = Curve::from_ints(1, 0, 3, -4).unwrap();
        let p = intersection_pattern(&inner, &outer);
        let rec = p.to_record(Some(pair_type_of(&p)));
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"interior_count":1,"tangent":true,"shared_endpoints":0,"type":"type1"}"#
        );
    }
}
