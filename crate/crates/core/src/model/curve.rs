//! Geodesics, horocycles and hypercycles as restrictions of generalized
//! circles to the upper half-plane.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::circle::GeneralizedCircle;
use crate::model::number::{qi, Quad, Rational};
use crate::model::point::UhpPoint;

/// The three curve classes of constant geodesic curvature handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Geodesic,
    Horocycle,
    Hypercycle,
}

impl CurveKind {
    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Geodesic => "geodesic",
            CurveKind::Horocycle => "horocycle",
            CurveKind::Hypercycle => "hypercycle",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "geodesic" => Ok(CurveKind::Geodesic),
            "horocycle" => Ok(CurveKind::Horocycle),
            "hypercycle" => Ok(CurveKind::Hypercycle),
            other => Err(Error::Parse(format!("unknown curve kind {other:?}"))),
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of [`classify_curve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Curve(CurveKind),
    /// A circle strictly inside the half-plane.
    HyperbolicCircle,
    /// The locus misses the open half-plane.
    NotInUpperHalfPlane,
}

/// Classifies a generalized circle by exact sign tests on `a, b, c` and
/// `b² − 4ad`.
pub fn classify_circle(circle: &GeneralizedCircle) -> Classification {
    let [a, b, c, d] = circle.int_coeffs();
    let disc = circle.boundary_discriminant();
    if a.is_zero() {
        return if c.is_zero() {
            Classification::Curve(CurveKind::Geodesic)
        } else if b.is_zero() {
            // y = −d/c
            if (-d * c).is_positive() {
                Classification::Curve(CurveKind::Horocycle)
            } else {
                Classification::NotInUpperHalfPlane
            }
        } else {
            Classification::Curve(CurveKind::Hypercycle)
        };
    }
    // canonical form has a > 0, so the center height −c/2a has the sign of −c
    if disc.is_positive() {
        if c.is_zero() {
            Classification::Curve(CurveKind::Geodesic)
        } else {
            Classification::Curve(CurveKind::Hypercycle)
        }
    } else if disc.is_zero() {
        if c.is_negative() {
            Classification::Curve(CurveKind::Horocycle)
        } else {
            Classification::NotInUpperHalfPlane
        }
    } else if c.is_negative() {
        Classification::HyperbolicCircle
    } else {
        Classification::NotInUpperHalfPlane
    }
}

/// Classifies raw coefficients; fails on a degenerate tuple.
pub fn classify_curve(
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
) -> Result<Classification> {
    Ok(classify_circle(&GeneralizedCircle::new(a, b, c, d)?))
}

/// A geodesic, horocycle or hypercycle with its derived boundary data.
#[derive(Clone, Debug)]
pub struct Curve {
    circle: GeneralizedCircle,
    kind: CurveKind,
    endpoints: Vec<BoundaryPoint>,
    center: Option<BoundaryPoint>,
    size: Option<Rational>,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.circle == other.circle
    }
}

impl Eq for Curve {}

impl std::hash::Hash for Curve {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.circle.hash(state)
    }
}

impl Curve {
    /// Wraps a circle whose trace in the half-plane is one of the three
    /// supported curve classes.
    pub fn from_circle(circle: GeneralizedCircle) -> Result<Self> {
        let kind = match classify_circle(&circle) {
            Classification::Curve(k) => k,
            Classification::HyperbolicCircle => {
                return Err(Error::InvalidInput(format!(
                    "{circle} is a hyperbolic circle (not supported)"
                )))
            }
            Classification::NotInUpperHalfPlane => {
                return Err(Error::InvalidInput(format!(
                    "{circle} does not meet the upper half-plane"
                )))
            }
        };
        let endpoints = boundary_trace(&circle);
        let (center, size) = if kind == CurveKind::Horocycle {
            let (a, b, c, d) = (circle.a(), circle.b(), circle.c(), circle.d());
            if a.is_zero() {
                (Some(BoundaryPoint::Infinity), Some(-d / c))
            } else {
                let two_a = qi(2) * &a;
                (Some(BoundaryPoint::Finite(-b / &two_a)), Some(-c / two_a))
            }
        } else {
            (None, None)
        };
        Ok(Curve {
            circle,
            kind,
            endpoints,
            center,
            size,
        })
    }

    pub fn from_coeffs(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        Self::from_circle(GeneralizedCircle::new(a, b, c, d)?)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::from_circle(GeneralizedCircle::from_ints(a, b, c, d)?)
    }

    pub fn circle(&self) -> &GeneralizedCircle {
        &self.circle
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    /// Distinct boundary points of the curve, sorted (`∞` last). Geodesics
    /// and hypercycles have two, horocycles one (the center).
    pub fn endpoints(&self) -> &[BoundaryPoint] {
        &self.endpoints
    }

    pub fn center(&self) -> Option<&BoundaryPoint> {
        self.center.as_ref()
    }

    /// Euclidean radius for a finite center, height of the line for `∞`.
    pub fn size(&self) -> Option<&Rational> {
        self.size.as_ref()
    }

    pub fn is_geodesic(&self) -> bool {
        self.kind == CurveKind::Geodesic
    }
    pub fn is_horocycle(&self) -> bool {
        self.kind == CurveKind::Horocycle
    }
    pub fn is_hypercycle(&self) -> bool {
        self.kind == CurveKind::Hypercycle
    }

    /// Exact incidence test for a rational point.
    pub fn contains(&self, p: &UhpPoint) -> Option<bool> {
        p.coords().map(|(x, y)| self.circle.eval(x, y).is_zero())
    }

    /// Recomputes the derived data from the circle and compares.
    pub fn check_consistency(&self) -> bool {
        match Curve::from_circle(self.circle.clone()) {
            Ok(fresh) => {
                fresh.kind == self.kind
                    && fresh.endpoints == self.endpoints
                    && fresh.center == self.center
                    && fresh.size == self.size
            }
            Err(_) => false,
        }
    }

    /// Canonical one-line text form, e.g. `horocycle a=1 b=0 c=-1 d=0`.
    pub fn to_text(&self) -> String {
        format!("{} {}", self.kind, self.circle)
    }

    /// Parses the canonical text form. The kind tag must agree with the
    /// coefficients.
    pub fn parse_text(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let kind = CurveKind::parse(
            parts
                .next()
                .ok_or_else(|| Error::Parse("empty curve".into()))?,
        )?;
        let mut coeffs: [Option<Rational>; 4] = [None, None, None, None];
        for p in parts {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {p:?}")))?;
            let idx = match k {
                "a" => 0,
                "b" => 1,
                "c" => 2,
                "d" => 3,
                _ => return Err(Error::Parse(format!("unknown coefficient {k:?}"))),
            };
            coeffs[idx] = Some(crate::model::number::parse_rational(v)?);
        }
        let [a, b, c, d] = coeffs;
        let get = |x: Option<Rational>, n: &str| {
            x.ok_or_else(|| Error::Parse(format!("missing coefficient {n}")))
        };
        let curve = Curve::from_coeffs(get(a, "a")?, get(b, "b")?, get(c, "c")?, get(d, "d")?)?;
        if curve.kind != kind {
            return Err(Error::Parse(format!(
                "tag {kind} disagrees with coefficients ({})",
                curve.kind
            )));
        }
        Ok(curve)
    }

    pub fn to_record(&self) -> CurveRecord {
        let [a, b, c, d] = self.circle.int_coeffs();
        CurveRecord {
            kind: self.kind,
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
            d: d.to_string(),
        }
    }

    pub fn from_record(r: &CurveRecord) -> Result<Self> {
        let p = |s: &str| {
            s.parse::<BigInt>()
                .map(Rational::from_integer)
                .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
        };
        let curve = Curve::from_coeffs(p(&r.a)?, p(&r.b)?, p(&r.c)?, p(&r.d)?)?;
        if curve.kind != r.kind {
            return Err(Error::Parse(format!(
                "kind {} disagrees with coefficients",
                r.kind
            )));
        }
        Ok(curve)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Structured record mirroring the text form; coefficients are exact integer
/// strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub kind: CurveKind,
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
}

/// Distinct real roots of `ax² + bx + d`, plus `∞` for lines.
pub(crate) fn boundary_trace(circle: &GeneralizedCircle) -> Vec<BoundaryPoint> {
    let (a, b, d) = (circle.a(), circle.b(), circle.d());
    let mut out = Vec::new();
    if a.is_zero() {
        if !b.is_zero() {
            out.push(BoundaryPoint::Finite(-d / b));
        }
        out.push(BoundaryPoint::Infinity);
        return out;
    }
    let disc = Rational::from_integer(circle.boundary_discriminant());
    if disc.is_negative() {
        return out;
    }
    let two_a = qi(2) * &a;
    let mid = -b / &two_a;
    if disc.is_zero() {
        out.push(BoundaryPoint::Finite(mid));
        return out;
    }
    let half = Rational::from_integer(num_traits::One::one()) / &two_a;
    let lo = Quad::new(mid.clone(), -half.clone(), disc.clone());
    let hi = Quad::new(mid, half, disc);
    let mut pts = vec![BoundaryPoint::from_quad(lo), BoundaryPoint::from_quad(hi)];
    pts.sort();
    out.extend(pts);
    out
}

/// The geodesic with endpoints `p` and `q`.
pub fn make_geodesic(p: &BoundaryPoint, q: &BoundaryPoint) -> Result<Curve> {
    if p == q {
        return invalid(format!("geodesic endpoints coincide at {p}"));
    }
    let circle = match (p, q) {
        (BoundaryPoint::Infinity, x) | (x, BoundaryPoint::Infinity) => {
            let x = rational_point(x)?;
            GeneralizedCircle::new(qi(0), qi(1), qi(0), -x)?
        }
        _ => {
            let (s, t) = (p.as_quad().unwrap(), q.as_quad().unwrap());
            // (x − s)(x − t) must have rational coefficients
            let sum = &s + &t;
            let prod = &s * &t;
            match (sum.as_rational(), prod.as_rational()) {
                (Some(sum), Some(prod)) => {
                    GeneralizedCircle::new(qi(1), -sum.clone(), qi(0), prod.clone())?
                }
                _ => return invalid(format!("geodesic ({p}, {q}) has irrational coefficients")),
            }
        }
    };
    Curve::from_circle(circle)
}

fn rational_point(x: &BoundaryPoint) -> Result<Rational> {
    match x {
        BoundaryPoint::Finite(v) => Ok(v.clone()),
        other => invalid(format!("boundary point {other} is not rational")),
    }
}

/// The horocycle with the given center and size (Euclidean radius for a
/// finite center, height for `∞`).
pub fn make_horocycle(center: &BoundaryPoint, size: &Rational) -> Result<Curve> {
    if !size.is_positive() {
        return invalid(format!("horocycle size {size} must be positive"));
    }
    let circle = match center {
        BoundaryPoint::Infinity => GeneralizedCircle::new(qi(0), qi(0), qi(1), -size.clone())?,
        x => {
            let p = rational_point(x)?;
            GeneralizedCircle::new(qi(1), qi(-2) * &p, qi(-2) * size, &p * &p)?
        }
    };
    Curve::from_circle(circle)
}

/// The hypercycle with endpoints `p`, `q` passing through `through`.
///
/// Fails with [`Error::Degenerate`] when `through` lies on the geodesic
/// `(p, q)`. Approximate points are rejected here; see
/// [`crate::model::distance::hypercycle_through_approx`] for the floating
/// construction.
pub fn make_hypercycle(p: &BoundaryPoint, q: &BoundaryPoint, through: &UhpPoint) -> Result<Curve> {
    if p == q {
        return invalid(format!("hypercycle endpoints coincide at {p}"));
    }
    let (x, y) = through.coords().ok_or_else(|| {
        Error::InvalidInput("inexact point: use the floating construction".into())
    })?;
    // a(x² + y²) + bx + cy + d through (p,0), (q,0), (x,y)
    let circle = match (p, q) {
        (BoundaryPoint::Infinity, s) | (s, BoundaryPoint::Infinity) => {
            let s = rational_point(s)?;
            // line b(x − s) + c y = 0 through (x, y): b = y, c = s − x
            GeneralizedCircle::new(qi(0), y.clone(), &s - x, -(y * &s))?
        }
        _ => {
            let (s, t) = (rational_point(p)?, rational_point(q)?);
            // x² + y² − (s+t)x + cy + st = 0, solve for c
            let c = -((x * x + y * y) - (&s + &t) * x + &s * &t) / y;
            GeneralizedCircle::new(qi(1), -(&s + &t), c, &s * &t)?
        }
    };
    let curve = Curve::from_circle(circle)?;
    if curve.kind == CurveKind::Geodesic {
        return Err(Error::Degenerate(format!(
            "{through} lies on the geodesic ({p}, {q}): {}",
            curve.circle
        )));
    }
    Ok(curve)
}
