//! Seeded generators for curves, isometries and designed curve pairs.
//!
//! Everything here is exact: points, coefficients and isometries are
//! rational, and the designed pairs come with their rational contact or
//! crossing points. The same seed always gives the same sequence.

use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::constructions::family::disjoint_pair;
use crate::constructions::witness::{second_point, RPoint};
use crate::model::boundary::BoundaryPoint;
use crate::model::curve::{make_geodesic, make_horocycle, make_hypercycle, Curve, CurveKind};
use crate::model::isometry::{Isometry, Orientation};
use crate::model::number::{q, qi, Rational};
use crate::model::point::UhpPoint;

/// A pair of curves meeting in a designed way, with two rational points of
/// `h1` on either side of the meeting point.
#[derive(Clone, Debug)]
pub struct DesignedPair {
    pub h1: Curve,
    pub h2: Curve,
    pub meet: RPoint,
    pub x: RPoint,
    pub y: RPoint,
}

pub struct Sampler {
    rng: StdRng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: StdRng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn unit(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.rng.gen_range(0..xs.len())]
    }

    /// A rational `n/d` with `|n| ≤ num` and `1 ≤ d ≤ den`.
    pub fn rational(&mut self, num: i64, den: i64) -> Rational {
        q(self.int(-num, num), self.int(1, den))
    }

    pub fn positive(&mut self, num: i64, den: i64) -> Rational {
        q(self.int(1, num), self.int(1, den))
    }

    /// A rational in the open interval `(lo, hi)`.
    pub fn between(&mut self, lo: &Rational, hi: &Rational) -> Rational {
        let k = self.int(1, 15);
        lo + (hi - lo) * q(k, 16)
    }

    /// A finite rational boundary point, or `∞` with probability `p_inf`.
    pub fn boundary(&mut self, p_inf: f64) -> BoundaryPoint {
        if self.coin(p_inf) {
            BoundaryPoint::Infinity
        } else {
            BoundaryPoint::Finite(self.rational(12, 6))
        }
    }

    pub fn distinct_boundary(&mut self, n: usize, p_inf: f64) -> Vec<BoundaryPoint> {
        let mut out: Vec<BoundaryPoint> = Vec::with_capacity(n);
        while out.len() < n {
            let p = self.boundary(p_inf);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Four distinct boundary points in cyclic order, the last one `∞` a
    /// quarter of the time.
    pub fn quadruple(&mut self) -> [BoundaryPoint; 4] {
        let mut v = self.distinct_boundary(4, 0.0);
        v.sort();
        if self.coin(0.25) {
            v[3] = BoundaryPoint::Infinity;
        }
        let r = self.int(0, 3) as usize;
        v.rotate_left(r);
        [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
    }

    pub fn point(&mut self) -> (Rational, Rational) {
        (self.rational(8, 4), self.positive(8, 4))
    }

    /// An isometry with small integer matrix entries.
    pub fn isometry(&mut self) -> Isometry {
        let orientation = if self.coin(0.5) {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        };
        loop {
            let m: Vec<i64> = (0..4).map(|_| self.int(-4, 4)).collect();
            if m[0] * m[3] - m[1] * m[2] > 0 {
                return Isometry::from_ints(m[0], m[1], m[2], m[3], orientation)
                    .expect("positive determinant");
            }
        }
    }

    pub fn geodesic(&mut self) -> Curve {
        let p = self.distinct_boundary(2, 0.15);
        make_geodesic(&p[0], &p[1]).expect("distinct rational endpoints")
    }

    pub fn horocycle(&mut self) -> Curve {
        let c = self.boundary(0.15);
        let r = self.positive(6, 6);
        make_horocycle(&c, &r).expect("positive size")
    }

    pub fn hypercycle(&mut self) -> Curve {
        loop {
            let p = self.distinct_boundary(2, 0.15);
            let (x, y) = self.point();
            if let Ok(h) = make_hypercycle(&p[0], &p[1], &UhpPoint::Exact { x, y }) {
                return h;
            }
        }
    }

    pub fn curve(&mut self) -> Curve {
        match self.int(0, 2) {
            0 => self.geodesic(),
            1 => self.horocycle(),
            _ => self.hypercycle(),
        }
    }

    pub fn curve_of(&mut self, kind: CurveKind) -> Curve {
        match kind {
            CurveKind::Geodesic => self.geodesic(),
            CurveKind::Horocycle => self.horocycle(),
            CurveKind::Hypercycle => self.hypercycle(),
        }
    }

    fn moved(&mut self, h1: Curve, h2: Curve, meet: RPoint, x: RPoint, y: RPoint) -> DesignedPair {
        let g = self.isometry();
        let im = |p: &RPoint| g.apply_exact(&p.0, &p.1);
        DesignedPair {
            h1: g.apply_curve(&h1),
            h2: g.apply_curve(&h2),
            meet: im(&meet),
            x: im(&x),
            y: im(&y),
        }
    }

    /// Two hypercycles tangent at a rational interior point.
    pub fn type1_pair(&mut self) -> DesignedPair {
        loop {
            // x² + y² + c y − 1 − c = 0 passes through i with a horizontal tangent
            let c1 = self.rational(12, 4);
            let c2 = self.rational(12, 4);
            if c1 == c2 || c1 <= qi(-1) || c2 <= qi(-1) || c1.is_zero() || c2.is_zero() {
                continue;
            }
            let make = |c: &Rational| Curve::from_coeffs(qi(1), qi(0), c.clone(), -(qi(1) + c));
            let (h1, h2) = (make(&c1).unwrap(), make(&c2).unwrap());
            let top = (qi(0), qi(1));
            let m = q(1, self.int(2, 12));
            let (x, y) = match (
                second_point(&h1, &top, Some(&m)),
                second_point(&h1, &top, Some(&-m.clone())),
            ) {
                (Some(x), Some(y)) => (x, y),
                _ => continue,
            };
            return self.moved(h1, h2, top, x, y);
        }
    }

    /// Two hypercycles crossing once at a rational point and sharing one
    /// endpoint.
    pub fn type2_pair(&mut self) -> DesignedPair {
        loop {
            let p = self.point();
            let (x1, x2) = (self.rational(12, 4), self.rational(12, 4));
            if x1 == x2 || x1 == p.0 || x2 == p.0 {
                continue;
            }
            let h1 = line_through(&x1, &p);
            let h2 = line_through(&x2, &p);
            let (x, y) = on_line(&x1, &p);
            return self.moved(h1, h2, p, x, y);
        }
    }

    /// Two hypercycles crossing once at a rational point with four distinct
    /// endpoints.
    pub fn type3_pair(&mut self) -> DesignedPair {
        loop {
            let p = self.point();
            let e1 = self.rational(12, 4);
            let e2 = self.rational(12, 4);
            if e1 >= e2 {
                continue;
            }
            let x1 = self.between(&e1, &e2);
            if x1 == p.0 {
                continue;
            }
            let h2 = match make_hypercycle(
                &BoundaryPoint::Finite(e1),
                &BoundaryPoint::Finite(e2),
                &UhpPoint::Exact {
                    x: p.0.clone(),
                    y: p.1.clone(),
                },
            ) {
                Ok(h) => h,
                Err(_) => continue,
            };
            let h1 = line_through(&x1, &p);
            let (x, y) = on_line(&x1, &p);
            return self.moved(h1, h2, p, x, y);
        }
    }

    /// A disjoint (horocycle, hypercycle) pair.
    pub fn disjoint_horo_hyper(&mut self) -> (Curve, Curve) {
        loop {
            let b = self.positive(8, 4);
            let tau = q(self.int(1, 7), 8);
            let g = self.isometry();
            if let Ok(pair) = disjoint_pair(&b, &tau, &g) {
                return pair;
            }
        }
    }
}

/// The line through `(x0, 0)` and `p`.
fn line_through(x0: &Rational, p: &RPoint) -> Curve {
    // p.1 (x − x0) − (p.0 − x0) y = 0
    Curve::from_coeffs(qi(0), p.1.clone(), -(&p.0 - x0), -(&p.1 * x0)).expect("non-degenerate line")
}

/// Two rational points on the segment from `(x0, 0)` through `p`, one before
/// `p` and one beyond it.
fn on_line(x0: &Rational, p: &RPoint) -> (RPoint, RPoint) {
    let at = |s: Rational| (x0 + (&p.0 - x0) * &s, &p.1 * &s);
    let (a, b) = (at(q(1, 2)), at(qi(2)));
    debug_assert!(a.1.is_positive() && b.1.is_positive());
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::pattern::{hypercycle_pair_type, HypercyclePairType};

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(11);
        let mut b = Sampler::new(11);
        for _ in 0..20 {
            assert_eq!(a.curve(), b.curve());
        }
    }

    #[test]
    fn designed_pairs_have_their_type() {
        let mut s = Sampler::new(3);
        for _ in 0..30 {
            let p = s.type1_pair();
            assert_eq!(
                hypercycle_pair_type(&p.h1, &p.h2).unwrap(),
                HypercyclePairType::Type1
            );
            let p = s.type2_pair();
            assert_eq!(
                hypercycle_pair_type(&p.h1, &p.h2).unwrap(),
                HypercyclePairType::Type2
            );
            let p = s.type3_pair();
            assert_eq!(
                hypercycle_pair_type(&p.h1, &p.h2).unwrap(),
                HypercyclePairType::Type3
            );
            for pt in [&p.meet, &p.x, &p.y] {
                assert!(p.h1.circle().eval(&pt.0, &pt.1).is_zero());
            }
        }
    }
}
