//! Exact scalars: rationals and elements of real quadratic fields.
//!
//! Every combinatorial question in the kernel is answered by the sign of an
//! expression of the form `A + B·√r` (or a sum of two such radicals), which
//! is decided here without rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as a rational. Panics when `d == 0`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 only fails on overflow.
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Renders `p` or `p/q`.
pub fn fmt_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses an integer or `p/q` literal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Best rational approximation with denominator at most `max_den`
/// (continued fractions). Used to pick rational sample parameters.
pub fn rational_near(x: f64, max_den: i64) -> Rational {
    assert!(x.is_finite(), "rational_near on {x}");
    let (mut h0, mut h1): (i64, i64) = (0, 1);
    let (mut k0, mut k1): (i64, i64) = (1, 0);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i64;
        let k2 = a.saturating_mul(k1).saturating_add(k0);
        if k2 > max_den || k2 <= 0 {
            break;
        }
        let h2 = a.saturating_mul(h1).saturating_add(h0);
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        let frac = v - a as f64;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return qi(x.round() as i64);
    }
    q(h1, k1)
}

/// Exact square root of a nonnegative rational, when it is rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// Sign of `a + b·√r` for `r ≥ 0`.
pub fn sign_surd(a: &Rational, b: &Rational, r: &Rational) -> Ordering {
    let sa = a.cmp(&Rational::zero());
    let sb = if r.is_zero() {
        Ordering::Equal
    } else {
        b.cmp(&Rational::zero())
    };
    match (sa, sb) {
        (x, Ordering::Equal) => x,
        (Ordering::Equal, y) => y,
        (x, y) if x == y => x,
        _ => {
            // opposite signs: compare magnitudes
            let lhs = a * a;
            let rhs = b * b * r;
            match lhs.cmp(&rhs) {
                Ordering::Greater => sa,
                Ordering::Less => sb,
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

/// Sign of `a + b·√r + c·√s` for `r, s ≥ 0`.
pub fn sign_two_surds(
    a: &Rational,
    b: &Rational,
    r: &Rational,
    c: &Rational,
    s: &Rational,
) -> Ordering {
    let su = sign_surd(a, b, r);
    let sv = if s.is_zero() {
        Ordering::Equal
    } else {
        c.cmp(&Rational::zero())
    };
    match (su, sv) {
        (x, Ordering::Equal) => x,
        (Ordering::Equal, y) => y,
        (x, y) if x == y => x,
        _ => {
            // |u|² − |v|² = a² + b²r − c²s + 2ab√r
            let rat = a * a + b * b * r - c * c * s;
            let irr = qi(2) * a * b;
            match sign_surd(&rat, &irr, r) {
                Ordering::Greater => su,
                Ordering::Less => sv,
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

/// An element `a + b·√r` of a real quadratic field (`r ≥ 0`).
///
/// Values with `b = 0` are plain rationals and are kept with `r = 0`.
/// Arithmetic between two irrational values requires equal radicands;
/// comparisons work across radicands.
#[derive(Clone, Debug)]
pub struct Quad {
    pub a: Rational,
    pub b: Rational,
    pub r: Rational,
}

impl Quad {
    pub fn rational(a: Rational) -> Self {
        Quad {
            a,
            b: Rational::zero(),
            r: Rational::zero(),
        }
    }

    /// `a + b·√r`, folding perfect squares into the rational part.
    pub fn new(a: Rational, b: Rational, r: Rational) -> Self {
        assert!(!r.is_negative(), "negative radicand");
        if b.is_zero() || r.is_zero() {
            return Quad::rational(a);
        }
        if let Some(root) = rational_sqrt(&r) {
            return Quad::rational(a + b * root);
        }
        Quad { a, b, r }
    }

    pub fn zero() -> Self {
        Quad::rational(Rational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == Ordering::Equal
    }

    pub fn sign(&self) -> Ordering {
        sign_surd(&self.a, &self.b, &self.r)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_rational() {
            to_f64(&self.a)
        } else {
            to_f64(&self.a) + to_f64(&self.b) * to_f64(&self.r).sqrt()
        }
    }

    /// The Galois conjugate `a − b·√r`.
    pub fn conjugate(&self) -> Quad {
        Quad {
            a: self.a.clone(),
            b: -self.b.clone(),
            r: self.r.clone(),
        }
    }

    fn common_radicand(&self, other: &Quad) -> Rational {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.r.clone(),
            (_, true) => self.r.clone(),
            _ => {
                assert!(
                    self.r == other.r,
                    "mixed radicands {} and {}",
                    self.r,
                    other.r
                );
                self.r.clone()
            }
        }
    }

    /// `self²` as rational when possible: used for norm computations.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.r
    }

    pub fn recip(&self) -> Quad {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        Quad::new(&self.a / &n, -(&self.b / &n), self.r.clone())
    }
}

impl PartialEq for Quad {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Quad {}

impl PartialOrd for Quad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Quad {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = &self.a - &other.a;
        let c = -other.b.clone();
        sign_two_surds(&a, &self.b, &self.r, &c, &other.r)
    }
}

impl Add for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Quad) -> Quad {
        let r = self.common_radicand(rhs);
        Quad::new(&self.a + &rhs.a, &self.b + &rhs.b, r)
    }
}

impl Sub for &Quad {
    type Output = Quad;
    fn sub(self, rhs: &Quad) -> Quad {
        let r = self.common_radicand(rhs);
        Quad::new(&self.a - &rhs.a, &self.b - &rhs.b, r)
    }
}

impl Mul for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Quad) -> Quad {
        let r = self.common_radicand(rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &r;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Quad::new(a, b, r)
    }
}

impl Div for &Quad {
    type Output = Quad;
    fn div(self, rhs: &Quad) -> Quad {
        if rhs.is_rational() {
            assert!(!rhs.a.is_zero(), "division by zero");
            return Quad::new(&self.a / &rhs.a, &self.b / &rhs.a, self.r.clone());
        }
        self * &rhs.recip()
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::new(-self.a.clone(), -self.b.clone(), self.r.clone())
    }
}

impl Mul<&Rational> for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Rational) -> Quad {
        Quad::new(&self.a * rhs, &self.b * rhs, self.r.clone())
    }
}

impl Add<&Rational> for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Rational) -> Quad {
        Quad::new(&self.a + rhs, self.b.clone(), self.r.clone())
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let root = format!("√{}", fmt_rational(&self.r));
        let b = &self.b;
        let irr = if b.is_one() {
            root
        } else if *b == -Rational::one() {
            format!("-{root}")
        } else {
            format!("{}·{root}", fmt_rational(b))
        };
        if self.a.is_zero() {
            write!(f, "{irr}")
        } else if b.is_negative() {
            write!(
                f,
                "{} - {}",
                fmt_rational(&self.a),
                irr.trim_start_matches('-')
            )
        } else {
            write!(f, "{} + {}", fmt_rational(&self.a), irr)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt_f(a: f64, b: f64, r: f64) -> f64 {
        a + b * r.sqrt()
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/6").unwrap(), q(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), qi(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert_eq!(fmt_rational(&q(4, 6)), "2/3");
        assert_eq!(fmt_rational(&qi(-5)), "-5");
    }

    #[test]
    fn perfect_squares_fold() {
        let x = Quad::new(qi(1), qi(2), q(9, 4));
        assert!(x.is_rational());
        assert_eq!(x.a, qi(4));
        assert_eq!(rational_sqrt(&q(8, 2)), Some(qi(2)));
        assert_eq!(rational_sqrt(&qi(2)), None);
    }

    #[test]
    fn signs_match_floating_point_away_from_zero() {
        let cases = [(3, -2, 2), (-3, 2, 2), (1, -1, 1), (7, -5, 2), (-10, 7, 2)];
        for (a, b, r) in cases {
            let exact = sign_surd(&qi(a), &qi(b), &qi(r));
            let approx = sqrt_f(a as f64, b as f64, r as f64);
            let expect = if approx.abs() < 1e-12 {
                Ordering::Equal
            } else if approx > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            assert_eq!(exact, expect, "{a} + {b}√{r}");
        }
    }

    #[test]
    fn two_radicals() {
        // √2 + √3 − √(5 + 2√6) = 0, but √2 + √3 vs 3.14
        let s = sign_two_surds(&q(-314, 100), &qi(1), &qi(2), &qi(1), &qi(3));
        assert_eq!(s, Ordering::Greater);
        // √8 − 2√2 = 0
        let s = sign_two_surds(&qi(0), &qi(1), &qi(8), &qi(-2), &qi(2));
        assert_eq!(s, Ordering::Equal);
        let a = Quad::new(qi(0), qi(1), qi(8));
        let b = Quad::new(qi(0), qi(2), qi(2));
        assert_eq!(a, b);
    }

    #[test]
    fn field_arithmetic() {
        let x = Quad::new(qi(1), qi(1), qi(2));
        let y = &x * &x.conjugate();
        assert_eq!(y, Quad::rational(qi(-1)));
        let z = &Quad::rational(qi(1)) / &x;
        assert_eq!(&z * &x, Quad::rational(qi(1)));
        assert!((z.to_f64() - (2f64.sqrt() - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn continued_fraction_approximation() {
        assert_eq!(rational_near(0.75, 100), q(3, 4));
        assert_eq!(rational_near(std::f64::consts::PI, 120), q(355, 113));
        assert_eq!(rational_near(-2.0, 10), qi(-2));
    }
}
