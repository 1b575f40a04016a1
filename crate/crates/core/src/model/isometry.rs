//! Isometries of the half-plane as projective rational matrices.
//!
//! An orientation-preserving isometry acts by `z ↦ (m00 z + m01)/(m10 z + m11)`;
//! a reversing one first applies the reflection `z ↦ −z̄`. Matrices are kept
//! with positive determinant and are only defined up to a nonzero scalar;
//! equality compares canonical representatives.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::circle::{ApproxCircle, GeneralizedCircle};
use crate::model::curve::Curve;
use crate::model::number::{fmt_rational, qi, to_f64, Rational};
use crate::model::point::UhpPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Preserving,
    Reversing,
}

impl Orientation {
    fn compose(self, other: Orientation) -> Orientation {
        if self == other {
            Orientation::Preserving
        } else {
            Orientation::Reversing
        }
    }
}

#[derive(Clone, Debug)]
pub struct Isometry {
    m: [Rational; 4],
    orientation: Orientation,
}

impl PartialEq for Isometry {
    fn eq(&self, other: &Self) -> bool {
        self.orientation == other.orientation && self.canonical_ints() == other.canonical_ints()
    }
}

impl Eq for Isometry {}

impl Isometry {
    /// Builds an isometry from a matrix with positive determinant.
    pub fn new(
        m00: Rational,
        m01: Rational,
        m10: Rational,
        m11: Rational,
        orientation: Orientation,
    ) -> Result<Self> {
        let det = &m00 * &m11 - &m01 * &m10;
        if !det.is_positive() {
            return invalid(format!("isometry matrix has determinant {det} ≤ 0"));
        }
        Ok(Isometry {
            m: [m00, m01, m10, m11],
            orientation,
        })
    }

    pub fn from_ints(
        m00: i64,
        m01: i64,
        m10: i64,
        m11: i64,
        orientation: Orientation,
    ) -> Result<Self> {
        Self::new(qi(m00), qi(m01), qi(m10), qi(m11), orientation)
    }

    pub fn identity() -> Self {
        Isometry {
            m: [qi(1), qi(0), qi(0), qi(1)],
            orientation: Orientation::Preserving,
        }
    }

    /// `z ↦ z + t`.
    pub fn translation(t: Rational) -> Self {
        Isometry {
            m: [qi(1), t, qi(0), qi(1)],
            orientation: Orientation::Preserving,
        }
    }

    /// `z ↦ λz` for `λ > 0`.
    pub fn dilation(lambda: Rational) -> Result<Self> {
        Self::new(lambda, qi(0), qi(0), qi(1), Orientation::Preserving)
    }

    /// `z ↦ 2c − z̄`, the reflection in the vertical line `x = c`.
    pub fn reflection_in_vertical(c: Rational) -> Self {
        Isometry {
            m: [qi(1), qi(2) * c, qi(0), qi(1)],
            orientation: Orientation::Reversing,
        }
    }

    pub fn matrix(&self) -> &[Rational; 4] {
        &self.m
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn determinant(&self) -> Rational {
        &self.m[0] * &self.m[3] - &self.m[1] * &self.m[2]
    }

    /// Coprime integer matrix with first nonzero entry positive.
    pub fn canonical_ints(&self) -> [BigInt; 4] {
        let lcm = self
            .m
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .m
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let neg = ints
            .iter()
            .find(|x| !x.is_zero())
            .map(|x| x.is_negative())
            .unwrap_or(false);
        let g = if neg { -g } else { g };
        let v: Vec<BigInt> = ints.into_iter().map(|x| x / &g).collect();
        [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        // σ M = M̃ σ with M̃ = [m00, −m01; −m10, m11]
        let rhs = if self.orientation == Orientation::Reversing {
            other.twisted()
        } else {
            other.m.clone()
        };
        let a = &self.m;
        let b = &rhs;
        let m = [
            &a[0] * &b[0] + &a[1] * &b[2],
            &a[0] * &b[1] + &a[1] * &b[3],
            &a[2] * &b[0] + &a[3] * &b[2],
            &a[2] * &b[1] + &a[3] * &b[3],
        ];
        Isometry {
            m,
            orientation: self.orientation.compose(other.orientation),
        }
    }

    fn twisted(&self) -> [Rational; 4] {
        let m = &self.m;
        [m[0].clone(), -m[1].clone(), -m[2].clone(), m[3].clone()]
    }

    pub fn inverse(&self) -> Isometry {
        let m = &self.m;
        // adjugate has the same (positive) determinant
        let adj = Isometry {
            m: [m[3].clone(), -m[1].clone(), -m[2].clone(), m[0].clone()],
            orientation: Orientation::Preserving,
        };
        match self.orientation {
            Orientation::Preserving => adj,
            Orientation::Reversing => Isometry {
                m: adj.twisted(),
                orientation: Orientation::Reversing,
            },
        }
    }

    /// Image of a rational point, exact.
    pub fn apply_exact(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        let x = match self.orientation {
            Orientation::Preserving => x.clone(),
            Orientation::Reversing => -x.clone(),
        };
        let [m00, m01, m10, m11] = &self.m;
        // (m00 z + m01) / (m10 z + m11) with z = x + iy
        let (nr, ni) = (m00 * &x + m01, m00 * y);
        let (dr, di) = (m10 * &x + m11, m10 * y);
        let den = &dr * &dr + &di * &di;
        let re = (&nr * &dr + &ni * &di) / &den;
        let im = (&ni * &dr - &nr * &di) / &den;
        (re, im)
    }

    pub fn apply_point(&self, p: &UhpPoint) -> UhpPoint {
        match p {
            UhpPoint::Exact { x, y } => {
                let (u, v) = self.apply_exact(x, y);
                UhpPoint::Exact { x: u, y: v }
            }
            UhpPoint::Approx { x, y } => {
                let (u, v) = self.to_f64().apply(*x, *y);
                UhpPoint::Approx { x: u, y: v }
            }
        }
    }

    pub fn apply_boundary(&self, p: &BoundaryPoint) -> BoundaryPoint {
        let [m00, m01, m10, m11] = &self.m;
        let reversing = self.orientation == Orientation::Reversing;
        match p {
            BoundaryPoint::Infinity => {
                if m10.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    // M(−∞) = M(∞) on the projective line
                    BoundaryPoint::Finite(m00 / m10)
                }
            }
            BoundaryPoint::Finite(x) => {
                let x = if reversing { -x.clone() } else { x.clone() };
                let den = m10 * &x + m11;
                if den.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite((m00 * &x + m01) / den)
                }
            }
            BoundaryPoint::Algebraic(s) => {
                let s = if reversing { -s } else { s.clone() };
                let num = &(&s * m00) + m01;
                let den = &(&s * m10) + m11;
                BoundaryPoint::from_quad(&num / &den)
            }
        }
    }

    pub fn apply_circle(&self, c: &GeneralizedCircle) -> GeneralizedCircle {
        let [a, b, cc, d] = c.coeffs();
        // reflection z ↦ −z̄ first: x ↦ −x
        let b = match self.orientation {
            Orientation::Preserving => b,
            Orientation::Reversing => -b,
        };
        // pull back through N = adj(M): H' = Nᵀ H N
        let [m00, m01, m10, m11] = &self.m;
        let (n00, n01, n10, n11) = (m11.clone(), -m01.clone(), -m10.clone(), m00.clone());
        let det_n = &n00 * &n11 - &n01 * &n10;
        let two = qi(2);
        let a2 = &a * &n00 * &n00 + &b * &n00 * &n10 + &d * &n10 * &n10;
        let d2 = &a * &n01 * &n01 + &b * &n01 * &n11 + &d * &n11 * &n11;
        let b2 =
            &two * &a * &n00 * &n01 + &b * (&n00 * &n11 + &n01 * &n10) + &two * &d * &n10 * &n11;
        let c2 = &cc * det_n;
        GeneralizedCircle::new(a2, b2, c2, d2).expect("isometries preserve nondegenerate circles")
    }

    pub fn apply_curve(&self, c: &Curve) -> Curve {
        Curve::from_circle(self.apply_circle(c.circle()))
            .expect("isometries preserve curve classes")
    }

    pub fn to_f64(&self) -> IsometryF64 {
        IsometryF64 {
            m: [
                to_f64(&self.m[0]),
                to_f64(&self.m[1]),
                to_f64(&self.m[2]),
                to_f64(&self.m[3]),
            ],
            orientation: self.orientation,
        }
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        let tag = match self.orientation {
            Orientation::Preserving => "preserving",
            Orientation::Reversing => "reversing",
        };
        write!(
            f,
            "[{}, {}; {}, {}] {tag}",
            fmt_rational(a),
            fmt_rational(b),
            fmt_rational(c),
            fmt_rational(d)
        )
    }
}

/// Floating counterpart of [`Isometry`] for transcendental constructions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IsometryF64 {
    pub m: [f64; 4],
    pub orientation: Orientation,
}

impl IsometryF64 {
    pub fn identity() -> Self {
        IsometryF64 {
            m: [1.0, 0.0, 0.0, 1.0],
            orientation: Orientation::Preserving,
        }
    }

    pub fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        let x = if self.orientation == Orientation::Reversing {
            -x
        } else {
            x
        };
        let [m00, m01, m10, m11] = self.m;
        let (nr, ni) = (m00 * x + m01, m00 * y);
        let (dr, di) = (m10 * x + m11, m10 * y);
        let den = dr * dr + di * di;
        ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
    }

    /// Image of a boundary point; `f64::INFINITY` stands for `∞`.
    pub fn apply_boundary(&self, x: f64) -> f64 {
        let [m00, m01, m10, m11] = self.m;
        if x.is_infinite() {
            return if m10 == 0.0 { f64::INFINITY } else { m00 / m10 };
        }
        let x = if self.orientation == Orientation::Reversing {
            -x
        } else {
            x
        };
        let den = m10 * x + m11;
        if den == 0.0 {
            f64::INFINITY
        } else {
            (m00 * x + m01) / den
        }
    }

    pub fn compose(&self, other: &IsometryF64) -> IsometryF64 {
        let b = if self.orientation == Orientation::Reversing {
            [other.m[0], -other.m[1], -other.m[2], other.m[3]]
        } else {
            other.m
        };
        let a = self.m;
        IsometryF64 {
            m: [
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ],
            orientation: self.orientation.compose(other.orientation),
        }
    }

    pub fn inverse(&self) -> IsometryF64 {
        let m = self.m;
        let adj = [m[3], -m[1], -m[2], m[0]];
        match self.orientation {
            Orientation::Preserving => IsometryF64 {
                m: adj,
                orientation: Orientation::Preserving,
            },
            Orientation::Reversing => IsometryF64 {
                m: [adj[0], -adj[1], -adj[2], adj[3]],
                orientation: Orientation::Reversing,
            },
        }
    }

    pub fn apply_circle(&self, c: &ApproxCircle) -> ApproxCircle {
        let b = if self.orientation == Orientation::Reversing {
            -c.b
        } else {
            c.b
        };
        let (a, cc, d) = (c.a, c.c, c.d);
        let [m00, m01, m10, m11] = self.m;
        let (n00, n01, n10, n11) = (m11, -m01, -m10, m00);
        let det_n = n00 * n11 - n01 * n10;
        ApproxCircle::new(
            a * n00 * n00 + b * n00 * n10 + d * n10 * n10,
            2.0 * a * n00 * n01 + b * (n00 * n11 + n01 * n10) + 2.0 * d * n10 * n11,
            cc * det_n,
            a * n01 * n01 + b * n01 * n11 + d * n11 * n11,
        )
    }
}

/// An orientation-preserving isometry `φ` with `φ(x) = ∞` and `φ(y) = 0`.
///
/// For finite `x, y` this is `φ(z) = (z − y)/((y − x)(z − x))`, i.e.
/// `−1/(z − x) + 1/(y − x)`, whose determinant `(y − x)²` is positive.
pub fn two_point_normalizer(x: &BoundaryPoint, y: &BoundaryPoint) -> Result<Isometry> {
    if x == y {
        return invalid(format!("normalizer needs distinct points, got {x} twice"));
    }
    match (x, y) {
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(y)) => {
            Ok(Isometry::translation(-y.clone()))
        }
        (BoundaryPoint::Finite(x), BoundaryPoint::Infinity) => {
            Isometry::new(qi(0), qi(-1), qi(1), -x.clone(), Orientation::Preserving)
        }
        (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => {
            let k = y - x;
            Isometry::new(
                qi(1),
                -y.clone(),
                k.clone(),
                -(x * &k),
                Orientation::Preserving,
            )
        }
        _ => invalid("normalizer needs rational boundary points"),
    }
}

/// Floating version of [`two_point_normalizer`] accepting any real points
/// (`f64::INFINITY` for `∞`).
pub fn two_point_normalizer_f64(x: f64, y: f64) -> IsometryF64 {
    let m = if x.is_infinite() {
        [1.0, -y, 0.0, 1.0]
    } else if y.is_infinite() {
        [0.0, -1.0, 1.0, -x]
    } else {
        let k = y - x;
        [1.0, -y, k, -x * k]
    };
    IsometryF64 {
        m,
        orientation: Orientation::Preserving,
    }
}

/// The Möbius matrix (possibly with negative determinant) sending the triple
/// to `(0, 1, ∞)`.
fn to_zero_one_infinity(t: &[BoundaryPoint; 3]) -> Result<[Rational; 4]> {
    use BoundaryPoint::*;
    let r = |p: &BoundaryPoint| -> Result<Rational> {
        match p {
            Finite(v) => Ok(v.clone()),
            _ => invalid("triple normalizer needs rational points"),
        }
    };
    // S(z) = (z − z1)(z2 − z3) / ((z − z3)(z2 − z1))
    let m = match (&t[0], &t[1], &t[2]) {
        (Infinity, z2, z3) => {
            let (z2, z3) = (r(z2)?, r(z3)?);
            // (z2 − z3)/(z − z3)
            [qi(0), &z2 - &z3, qi(1), -z3]
        }
        (z1, Infinity, z3) => {
            let (z1, z3) = (r(z1)?, r(z3)?);
            // (z − z1)/(z − z3)
            [qi(1), -z1, qi(1), -z3]
        }
        (z1, z2, Infinity) => {
            let (z1, z2) = (r(z1)?, r(z2)?);
            // (z − z1)/(z2 − z1)
            [qi(1), -z1.clone(), qi(0), z2 - z1]
        }
        (z1, z2, z3) => {
            let (z1, z2, z3) = (r(z1)?, r(z2)?, r(z3)?);
            let k = &z2 - &z3;
            let l = &z2 - &z1;
            [k.clone(), -(&z1 * &k), l.clone(), -(&z3 * &l)]
        }
    };
    Ok(m)
}

/// The unique isometry sending `src[i]` to `dst[i]` for `i = 0, 1, 2`;
/// orientation-reversing when the two triples have opposite cyclic order.
pub fn triple_normalizer(src: &[BoundaryPoint; 3], dst: &[BoundaryPoint; 3]) -> Result<Isometry> {
    for t in [src, dst] {
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return invalid(format!(
                "triple ({}, {}, {}) repeats a point",
                t[0], t[1], t[2]
            ));
        }
    }
    let s = to_zero_one_infinity(src)?;
    let d = to_zero_one_infinity(dst)?;
    // T = D⁻¹ S, using adj(D)
    let di = [d[3].clone(), -d[1].clone(), -d[2].clone(), d[0].clone()];
    let t = [
        &di[0] * &s[0] + &di[1] * &s[2],
        &di[0] * &s[1] + &di[1] * &s[3],
        &di[2] * &s[0] + &di[3] * &s[2],
        &di[2] * &s[1] + &di[3] * &s[3],
    ];
    let det = &t[0] * &t[3] - &t[1] * &t[2];
    if det.is_positive() {
        let [a, b, c, dd] = t;
        Isometry::new(a, b, c, dd, Orientation::Preserving)
    } else if det.is_negative() {
        // z ↦ T(z̄) = (T ∘ neg)(−z̄)
        let [a, b, c, dd] = t;
        Isometry::new(-a, b, -c, dd, Orientation::Reversing)
    } else {
        Err(Error::InvalidInput("singular Möbius map".into()))
    }
}

/// Cross-ratio `(a, b; c, d) = ((a − c)(b − d))/((a − d)(b − c))` of four
/// distinct rational boundary points, `∞` handled by cancellation.
pub fn cross_ratio(p: [&BoundaryPoint; 4]) -> Result<Rational> {
    let vals: Vec<Option<Rational>> = p
        .iter()
        .map(|x| match x {
            BoundaryPoint::Finite(v) => Ok(Some(v.clone())),
            BoundaryPoint::Infinity => Ok(None),
            BoundaryPoint::Algebraic(_) => invalid("cross-ratio needs rational points"),
        })
        .collect::<Result<_>>()?;
    let diff = |i: usize, j: usize| -> Option<Rational> {
        match (&vals[i], &vals[j]) {
            (Some(x), Some(y)) => Some(x - y),
            _ => None,
        }
    };
    // factors involving ∞ cancel in pairs
    let factors = [
        (diff(0, 2), true),
        (diff(1, 3), true),
        (diff(0, 3), false),
        (diff(1, 2), false),
    ];
    let mut num = Rational::one();
    let mut den = Rational::one();
    for (f, top) in factors {
        if let Some(f) = f {
            if f.is_zero() {
                return invalid("cross-ratio of repeated points");
            }
            if top {
                num *= f;
            } else {
                den *= f;
            }
        }
    }
    Ok(num / den)
}
