//! Generalized circles `a(x² + y²) + bx + cy + d = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::model::number::{to_f64, Rational};

/// A circle or line with integer coefficients in canonical form.
///
/// Canonical form: coprime integer coefficients, and the first nonzero entry
/// of `(a, b, c)` is positive. Two loci are equal iff their canonical
/// coefficients are equal, so the derived `Eq`/`Hash` are set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedCircle {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl GeneralizedCircle {
    /// Builds and normalizes a circle from rational coefficients.
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::InvalidInput(
                "coefficients a, b, c are all zero".into(),
            ));
        }
        let disc = &b * &b + &c * &c - Rational::from_integer(BigInt::from(4)) * &a * &d;
        if !disc.is_positive() {
            return Err(Error::Degenerate(format!(
                "b² + c² − 4ad = {disc} ≤ 0: the locus is a point or empty"
            )));
        }
        let coeffs = [a, b, c, d];
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let lead_negative = ints[..3]
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.is_negative())
            .unwrap_or(false);
        let scale = if lead_negative { -g } else { g };
        let mut it = ints.into_iter().map(|x| x / &scale);
        Ok(GeneralizedCircle {
            a: it.next().unwrap(),
            b: it.next().unwrap(),
            c: it.next().unwrap(),
            d: it.next().unwrap(),
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let r = |v: i64| Rational::from_integer(BigInt::from(v));
        Self::new(r(a), r(b), r(c), r(d))
    }

    pub fn a(&self) -> Rational {
        Rational::from_integer(self.a.clone())
    }
    pub fn b(&self) -> Rational {
        Rational::from_integer(self.b.clone())
    }
    pub fn c(&self) -> Rational {
        Rational::from_integer(self.c.clone())
    }
    pub fn d(&self) -> Rational {
        Rational::from_integer(self.d.clone())
    }

    /// Canonical integer coefficients `[a, b, c, d]`.
    pub fn int_coeffs(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn coeffs(&self) -> [Rational; 4] {
        [self.a(), self.b(), self.c(), self.d()]
    }

    pub fn is_line(&self) -> bool {
        self.a.is_zero()
    }

    /// `b² − 4ad`: the discriminant of the trace on the real axis.
    pub fn boundary_discriminant(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.d
    }

    /// Evaluates the defining polynomial at `(x, y)`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.a() * (x * x + y * y) + self.b() * x + self.c() * y + self.d()
    }

    /// Re-canonicalizes; idempotent on values built through [`Self::new`].
    pub fn normalized(&self) -> Self {
        let [a, b, c, d] = self.coeffs();
        Self::new(a, b, c, d).expect("canonical circle stays valid")
    }

    pub fn to_approx(&self) -> ApproxCircle {
        let [a, b, c, d] = self.coeffs();
        ApproxCircle::new(to_f64(&a), to_f64(&b), to_f64(&c), to_f64(&d))
    }
}

impl fmt::Display for GeneralizedCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} c={} d={}", self.a, self.b, self.c, self.d)
    }
}

/// A generalized circle with floating coefficients, for curves that are not
/// rational (transcendental families, crescents at arbitrary distance) and for
/// rendering.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxCircle {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl ApproxCircle {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        ApproxCircle { a, b, c, d }
    }

    pub fn coeffs(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Scaled to unit Euclidean norm with the first nonzero of `(a, b, c)`
    /// positive, up to `tol`.
    pub fn normalized(&self, tol: f64) -> Self {
        let n = self.coeffs().iter().map(|x| x * x).sum::<f64>().sqrt();
        let mut v = self.coeffs().map(|x| x / n);
        let lead = v[..3]
            .iter()
            .copied()
            .find(|x| x.abs() > tol)
            .unwrap_or(1.0);
        if lead < 0.0 {
            v = v.map(|x| -x);
        }
        ApproxCircle::new(v[0], v[1], v[2], v[3])
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.a * (x * x + y * y) + self.b * x + self.c * y + self.d
    }

    /// Euclidean center and radius, `None` for lines.
    pub fn center_radius(&self) -> Option<((f64, f64), f64)> {
        if self.a == 0.0 {
            return None;
        }
        let cx = -self.b / (2.0 * self.a);
        let cy = -self.c / (2.0 * self.a);
        let r2 =
            (self.b * self.b + self.c * self.c - 4.0 * self.a * self.d) / (4.0 * self.a * self.a);
        Some(((cx, cy), r2.max(0.0).sqrt()))
    }

    /// Distance between coefficient vectors after normalization.
    pub fn coefficient_distance(&self, other: &ApproxCircle) -> f64 {
        let u = self.normalized(1e-300).coeffs();
        let v = other.normalized(1e-300).coeffs();
        let plus: f64 = u.iter().zip(v.iter()).map(|(p, q)| (p - q).powi(2)).sum();
        let minus: f64 = u.iter().zip(v.iter()).map(|(p, q)| (p + q).powi(2)).sum();
        plus.min(minus).sqrt()
    }

    /// Real roots of the trace `ax² + bx + d` on the boundary, plus `∞` (as
    /// `f64::INFINITY`) when the locus is a line. Sorted, finite roots first.
    pub fn boundary_points(&self, tol: f64) -> Vec<f64> {
        let mut out = Vec::new();
        let (a, b, d) = (self.a, self.b, self.d);
        let scale = self.coeffs().iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if a.abs() <= tol * scale {
            if b.abs() > tol * scale {
                out.push(-d / b);
            }
            out.push(f64::INFINITY);
            return out;
        }
        let disc = b * b - 4.0 * a * d;
        if disc < -tol * scale * scale {
            return out;
        }
        let s = disc.max(0.0).sqrt();
        // stable quadratic roots
        let qq = -0.5 * (b + b.signum() * s);
        let (r1, r2) = if qq != 0.0 {
            (qq / a, d / qq)
        } else {
            (0.0, 0.0)
        };
        let mut roots = vec![r1, r2];
        roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
        out.extend(roots);
        out
    }

    /// Points of the locus inside the upper half-plane, spread along the curve.
    ///
    /// Circles inside the half-plane are sampled by angle, circles crossing
    /// the axis by `x` between their endpoints; lines by
    /// a parameter that keeps `y` within `[y_min, y_max]` (or `x` within
    /// `[-x_span, x_span]` around the foot for horizontal lines).
    pub fn sample(&self, n: usize) -> Vec<(f64, f64)> {
        let mut pts = Vec::with_capacity(n);
        if n == 0 {
            return pts;
        }
        match self.center_radius() {
            Some(((cx, cy), r)) => {
                // arc above the axis: angles θ with cy + r sin θ > 0
                if cy >= r {
                    let (lo, hi) = (
                        -std::f64::consts::FRAC_PI_2,
                        3.0 * std::f64::consts::FRAC_PI_2,
                    );
                    for k in 0..n {
                        let th = lo + (hi - lo) * (k as f64 + 0.5) / n as f64;
                        pts.push((cx + r * th.cos(), cy + r * th.sin()));
                    }
                    return pts;
                }
                // major arc: reaches outside the endpoints, so sweep the angle
                if cy > 0.0 {
                    let al = (cy / r).asin();
                    let (lo, hi) = (-al, std::f64::consts::PI + al);
                    for k in 0..n {
                        let th = lo + (hi - lo) * (k as f64 + 0.5) / n as f64;
                        let p = (cx + r * th.cos(), cy + r * th.sin());
                        if p.1 > 0.0 {
                            pts.push(p);
                        }
                    }
                    return pts;
                }
                // crosses the axis: walk x between the endpoints and take the
                // positive root of y² + p y + (x − e1)(x − e2) = 0
                let (a, b, d) = (self.a, self.b, self.d);
                let disc = (b * b - 4.0 * a * d).max(0.0);
                let qq = -(b + b.signum() * disc.sqrt()) / 2.0;
                let (mut e1, mut e2) = if b == 0.0 {
                    let w = (-d / a).sqrt();
                    (-w, w)
                } else {
                    (qq / a, d / qq)
                };
                if e1 > e2 {
                    std::mem::swap(&mut e1, &mut e2);
                }
                if !(e1.is_finite() && e2.is_finite()) {
                    return ApproxCircle::new(0.0, b, self.c, d).sample(n);
                }
                let p = self.c / a;
                for k in 0..n {
                    let x = e1 + (e2 - e1) * (k as f64 + 0.5) / n as f64;
                    let m = (x - e1) * (x - e2);
                    let y = if p > 0.0 {
                        -2.0 * (m / p) / (1.0 + (1.0 - 4.0 * (m / p) / p).sqrt())
                    } else {
                        (-p + (p * p - 4.0 * m).sqrt()) / 2.0
                    };
                    if y > 0.0 && y.is_finite() {
                        pts.push((x, y));
                    }
                }
            }
            None => {
                let (b, c, d) = (self.b, self.c, self.d);
                if c == 0.0 {
                    let x0 = -d / b;
                    for k in 0..n {
                        let e = -2.0 + 4.0 * (k as f64 + 0.5) / n as f64;
                        pts.push((x0, 10f64.powf(e)));
                    }
                } else if b == 0.0 {
                    let y0 = -d / c;
                    for k in 0..n {
                        let x = -5.0 + 10.0 * (k as f64 + 0.5) / n as f64;
                        pts.push((x, y0));
                    }
                } else {
                    for k in 0..n {
                        let e = -2.0 + 4.0 * (k as f64 + 0.5) / n as f64;
                        let y = 10f64.powf(e);
                        let x = -(c * y + d) / b;
                        pts.push((x, y));
                    }
                }
            }
        }
        pts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::number::{q, qi};

    #[test]
    fn canonical_form_clears_denominators_and_fixes_sign() {
        let c = GeneralizedCircle::new(qi(-2), qi(0), q(3, 2), q(1, 2)).unwrap();
        assert_eq!(c.to_string(), "a=4 b=0 c=-3 d=-1");
        let line = GeneralizedCircle::new(qi(0), qi(0), qi(-3), qi(6)).unwrap();
        assert_eq!(line.to_string(), "a=0 b=0 c=1 d=-2");
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let c = GeneralizedCircle::new(q(3, 7), q(-1, 3), q(5, 2), qi(-4)).unwrap();
        assert_eq!(c.normalized(), c);
        assert_eq!(c.normalized().normalized(), c.normalized());
    }

    #[test]
    fn degenerate_tuples_are_rejected() {
        assert!(matches!(
            GeneralizedCircle::from_ints(0, 0, 0, 1),
            Err(Error::InvalidInput(_))
        ));
        // x² + y² + 1 = 0 is empty
        assert!(matches!(
            GeneralizedCircle::from_ints(1, 0, 0, 1),
            Err(Error::Degenerate(_))
        ));
        // x² + y² = 0 is a point
        assert!(GeneralizedCircle::from_ints(1, 0, 0, 0).is_err());
    }

    #[test]
    fn samples_lie_on_the_locus_above_the_axis() {
        for c in [
            ApproxCircle::new(1.0, 0.0, -0.75, -0.25),
            ApproxCircle::new(1.0, 0.0, -1.0, 0.0),
            ApproxCircle::new(0.0, 1.0, -1.0, 0.0),
            ApproxCircle::new(0.0, 0.0, 1.0, -2.0),
            ApproxCircle::new(0.0, 1.0, 0.0, 3.0),
        ] {
            let pts = c.sample(40);
            assert!(pts.len() >= 20);
            for (x, y) in pts {
                assert!(y > 0.0);
                assert!(c.eval(x, y).abs() < 1e-9, "{c:?} at ({x}, {y})");
            }
        }
    }

    #[test]
    fn major_arc_samples_pass_outside_the_endpoints() {
        // endpoints -3/16 and 0, center above the axis
        let c = ApproxCircle::new(48.0, 9.0, -13.0, 0.0);
        let pts = c.sample(64);
        assert!(pts.iter().any(|p| p.0 > 0.0) && pts.iter().any(|p| p.0 < -0.1875));
        assert!(pts
            .iter()
            .all(|&(x, y)| y > 0.0 && c.eval(x, y).abs() < 1e-9));
    }

    #[test]
    fn boundary_points_of_a_hypercycle() {
        let c = ApproxCircle::new(1.0, -4.0, -2.0, 3.0);
        let pts = c.boundary_points(1e-12);
        assert!((pts[0] - 1.0).abs() < 1e-12 && (pts[1] - 3.0).abs() < 1e-12);
        let line = ApproxCircle::new(0.0, 1.0, -1.0, 0.0);
        assert_eq!(line.boundary_points(1e-12), vec![0.0, f64::INFINITY]);
    }
}
