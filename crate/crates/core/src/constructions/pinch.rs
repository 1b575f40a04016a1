//! Horocycles tangent to two given disjoint horocycles.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::curve::{make_horocycle, Curve, CurveKind};
use crate::model::number::{qi, Quad, Rational};
use crate::predicates::pattern::intersection_pattern;

/// A horocycle whose center and size may be quadratic irrationals.
#[derive(Clone, Debug, PartialEq)]
pub struct PinchHorocycle {
    pub center: BoundaryPoint,
    pub size: Quad,
}

impl PinchHorocycle {
    /// The rational curve, when center and size are rational.
    pub fn to_curve(&self) -> Option<Curve> {
        let size = self.size.as_rational()?;
        match &self.center {
            BoundaryPoint::Algebraic(_) => None,
            c => make_horocycle(c, size).ok(),
        }
    }

    /// Exact tangency test against a rational horocycle.
    pub fn is_tangent_to(&self, h: &Curve) -> bool {
        if h.kind() != CurveKind::Horocycle {
            return false;
        }
        let r = Quad::rational(h.size().unwrap().clone());
        match (&self.center, h.center().unwrap()) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => false,
            (BoundaryPoint::Infinity, _) => self.size == &r * &qi(2),
            (_, BoundaryPoint::Infinity) => &self.size * &qi(2) == r,
            (c, p) => {
                let diff = &c.as_quad().unwrap() - &p.as_quad().unwrap();
                &diff * &diff == &(&self.size * &r) * &qi(4)
            }
        }
    }

    /// Floating center and size.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.center.to_f64(), self.size.to_f64())
    }
}

impl fmt::Display for PinchHorocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h({}, {})", self.center, self.size)
    }
}

fn finite(p: &BoundaryPoint) -> Rational {
    p.as_rational()
        .expect("horocycle centers are rational")
        .clone()
}

/// The horocycles tangent to both `h0` and `h`, ordered by center.
pub fn pinch_pair(h0: &Curve, h: &Curve) -> Result<Vec<PinchHorocycle>> {
    for c in [h0, h] {
        if c.kind() != CurveKind::Horocycle {
            return invalid(format!("expected a horocycle, got {c}"));
        }
    }
    let (c0, c1) = (h0.center().unwrap(), h.center().unwrap());
    if c0 == c1 {
        return Err(Error::NoSolution(format!(
            "both horocycles are centered at {c0}"
        )));
    }
    if !intersection_pattern(h0, h).is_disjoint() {
        return invalid(format!("{h0} and {h} intersect"));
    }
    let (r0, r1) = (h0.size().unwrap().clone(), h.size().unwrap().clone());
    let mut out = match (c0, c1) {
        (BoundaryPoint::Infinity, p) | (p, BoundaryPoint::Infinity) => {
            let (s, r, p) = if c0.is_infinity() {
                (r0, r1, finite(p))
            } else {
                (r1, r0, finite(p))
            };
            // tangent to y = s: ρ = s/2; tangent to h(p, r): (q − p)² = 2sr
            let rho = Quad::rational(&s / qi(2));
            let rad = qi(2) * &s * &r;
            [-1, 1]
                .into_iter()
                .map(|sg| PinchHorocycle {
                    center: BoundaryPoint::from_quad(Quad::new(p.clone(), qi(sg), rad.clone())),
                    size: rho.clone(),
                })
                .collect::<Vec<_>>()
        }
        (p0, p1) => {
            let (p0, p1) = (finite(p0), finite(p1));
            if r0 == r1 {
                let q = (&p0 + &p1) / qi(2);
                let rho = (&q - &p0) * (&q - &p0) / (qi(4) * &r0);
                vec![
                    PinchHorocycle {
                        center: BoundaryPoint::Finite(q),
                        size: Quad::rational(rho),
                    },
                    PinchHorocycle {
                        center: BoundaryPoint::Infinity,
                        size: Quad::rational(qi(2) * &r0),
                    },
                ]
            } else {
                // q = [(r1 p0 − r0 p1) ± √(r0 r1)(p0 − p1)] / (r1 − r0)
                let den = &r1 - &r0;
                let base = (&r1 * &p0 - &r0 * &p1) / &den;
                let coef = (&p0 - &p1) / &den;
                let rad = &r0 * &r1;
                [-1, 1]
                    .into_iter()
                    .map(|sg| {
                        let q = Quad::new(base.clone(), &coef * qi(sg), rad.clone());
                        let diff = &q + &(-p0.clone());
                        let size = &(&diff * &diff) * &(qi(1) / (qi(4) * &r0));
                        PinchHorocycle {
                            center: BoundaryPoint::from_quad(q),
                            size,
                        }
                    })
                    .collect()
            }
        }
    };
    out.sort_by(|a, b| a.center.cmp(&b.center));
    debug_assert!(out
        .iter()
        .all(|p| p.size.sign().is_gt() && p.is_tangent_to(h0) && p.is_tangent_to(h)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::number::q;

    fn horo(c: BoundaryPoint, r: Rational) -> Curve {
        make_horocycle(&c, &r).unwrap()
    }

    #[test]
    fn pinching_a_line_gives_irrational_centers() {
        let h0 = horo(BoundaryPoint::Finite(qi(0)), q(1, 2));
        let h = horo(BoundaryPoint::Infinity, qi(2));
        let out = pinch_pair(&h0, &h).unwrap();
        assert_eq!(out.len(), 2);
        let sqrt2 = Quad::new(qi(0), qi(1), qi(2));
        assert_eq!(out[0].center, BoundaryPoint::Algebraic(-&sqrt2));
        assert_eq!(out[1].center, BoundaryPoint::Algebraic(sqrt2));
        for p in &out {
            assert_eq!(p.size, Quad::rational(qi(1)));
            assert!(p.is_tangent_to(&h0) && p.is_tangent_to(&h));
            assert!(p.to_curve().is_none());
        }
    }

    #[test]
    fn equal_sizes_are_symmetric() {
        let h0 = horo(BoundaryPoint::Finite(qi(0)), q(1, 2));
        let h = horo(BoundaryPoint::Finite(qi(4)), q(1, 2));
        let out = pinch_pair(&h0, &h).unwrap();
        assert_eq!(
            out[0].to_curve().unwrap(),
            horo(BoundaryPoint::Finite(qi(2)), qi(2))
        );
        assert_eq!(
            out[1].to_curve().unwrap(),
            horo(BoundaryPoint::Infinity, qi(1))
        );
        for p in &out {
            let c = p.to_curve().unwrap();
            assert!(intersection_pattern(&c, &h0).tangent);
            assert!(intersection_pattern(&c, &h).tangent);
        }
    }

    #[test]
    fn unequal_sizes() {
        let h0 = horo(BoundaryPoint::Finite(qi(0)), q(1, 2));
        let h = horo(BoundaryPoint::Finite(qi(5)), qi(2));
        let out = pinch_pair(&h0, &h).unwrap();
        assert_eq!(out.len(), 2);
        for p in &out {
            assert!(p.is_tangent_to(&h0) && p.is_tangent_to(&h));
            // √(r0 r1) = 1 here, so the solutions are rational
            let c = p.to_curve().unwrap();
            assert!(intersection_pattern(&c, &h0).tangent && intersection_pattern(&c, &h).tangent);
        }
    }

    #[test]
    fn errors() {
        let h0 = horo(BoundaryPoint::Finite(qi(0)), q(1, 2));
        let same = horo(BoundaryPoint::Finite(qi(0)), qi(1));
        assert!(matches!(pinch_pair(&h0, &same), Err(Error::NoSolution(_))));
        let crossing = horo(BoundaryPoint::Finite(qi(1)), qi(1));
        assert!(matches!(
            pinch_pair(&h0, &crossing),
            Err(Error::InvalidInput(_))
        ));
    }
}
