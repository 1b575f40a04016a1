//! One-parameter families of curves and the classification of their limits.
//!
//! Families are transcendental in the parameter, so members are
//! [`ApproxCircle`]s. Each family is described in a convenient local frame
//! and carried to its actual position by a fixed isometry; all checks run in
//! the local frame, which is harmless since they are isometry invariant.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::circle::ApproxCircle;
use crate::model::curve::{Curve, CurveKind};
use crate::model::isometry::{two_point_normalizer, Isometry, IsometryF64};
use crate::model::number::{qi, rational_near, to_f64, Rational};
use crate::predicates::pattern::intersection_pattern;

/// Default number of grid parameters.
pub const DEFAULT_GRID: usize = 65;

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyLimit {
    FoliatesComponent,
    HorocycleLimit(ApproxCircle),
    HypercycleOrGeodesicLimit(ApproxCircle),
}

impl FamilyLimit {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyLimit::FoliatesComponent => "foliates-component",
            FamilyLimit::HorocycleLimit(_) => "horocycle-limit",
            FamilyLimit::HypercycleOrGeodesicLimit(_) => "hypercycle-or-geodesic-limit",
        }
    }

    pub fn curve(&self) -> Option<&ApproxCircle> {
        match self {
            FamilyLimit::FoliatesComponent => None,
            FamilyLimit::HorocycleLimit(c) | FamilyLimit::HypercycleOrGeodesicLimit(c) => Some(c),
        }
    }

    /// Same variant, with limit curves within `tol` in coefficient space.
    pub fn agrees_with(&self, other: &FamilyLimit, tol: f64) -> bool {
        match (self.curve(), other.curve()) {
            (None, None) => self.name() == other.name(),
            (Some(a), Some(b)) => self.name() == other.name() && a.coefficient_distance(b) < tol,
            _ => false,
        }
    }
}

impl fmt::Display for FamilyLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.curve() {
            None => write!(f, "{}", self.name()),
            Some(c) => {
                let n = c.normalized(1e-12);
                write!(
                    f,
                    "{} a={:.9} b={:.9} c={:.9} d={:.9}",
                    self.name(),
                    n.a,
                    n.b,
                    n.c,
                    n.d
                )
            }
        }
    }
}

type MemberFn = Arc<dyn Fn(f64) -> ApproxCircle + Send + Sync>;

#[derive(Clone)]
pub struct ContinuousFamily {
    pub name: String,
    /// Local frame to actual position.
    pub frame: IsometryF64,
    local: MemberFn,
    pub sample_grid: Vec<f64>,
    pub declared_limit: Option<FamilyLimit>,
    /// Probe curves (actual position) used to cross-check the limit.
    pub probes: Vec<ApproxCircle>,
    /// Set when the construction had to rescale its normalization.
    pub reparametrized: bool,
}

impl fmt::Debug for ContinuousFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ContinuousFamily")
            .field("name", &self.name)
            .field("grid", &self.sample_grid.len())
            .field("declared_limit", &self.declared_limit)
            .field("reparametrized", &self.reparametrized)
            .finish()
    }
}

/// `t_j = (1 − cos(jπ/n))/2` for `j = 0..n`, clustering near both ends and
/// never reaching `1`.
pub fn chebyshev_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|j| (1.0 - (j as f64 * PI / n as f64).cos()) / 2.0)
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyRecord {
    pub name: String,
    pub grid: Vec<f64>,
    pub members: Vec<[f64; 4]>,
    pub declared_limit: Option<String>,
    pub reparametrized: bool,
}

impl ContinuousFamily {
    pub fn new(name: impl Into<String>, frame: IsometryF64, local: MemberFn, grid: usize) -> Self {
        ContinuousFamily {
            name: name.into(),
            frame,
            local,
            sample_grid: chebyshev_grid(grid),
            declared_limit: None,
            probes: Vec::new(),
            reparametrized: false,
        }
    }

    /// Member at parameter `t` in its actual position.
    pub fn curve_at(&self, t: f64) -> ApproxCircle {
        self.frame.apply_circle(&(self.local)(t))
    }

    pub fn local_at(&self, t: f64) -> ApproxCircle {
        (self.local)(t)
    }

    pub fn with_grid(&self, n: usize) -> Self {
        let mut f = self.clone();
        f.sample_grid = chebyshev_grid(n);
        f
    }

    pub fn members(&self) -> Vec<ApproxCircle> {
        self.sample_grid.iter().map(|&t| self.curve_at(t)).collect()
    }

    fn local_members(&self) -> Vec<ApproxCircle> {
        self.sample_grid
            .iter()
            .map(|&t| self.local_at(t).normalized(0.0))
            .collect()
    }

    pub fn to_record(&self) -> FamilyRecord {
        FamilyRecord {
            name: self.name.clone(),
            grid: self.sample_grid.clone(),
            members: self
                .members()
                .iter()
                .map(|c| c.normalized(1e-300).coeffs())
                .collect(),
            declared_limit: self.declared_limit.as_ref().map(|l| l.to_string()),
            reparametrized: self.reparametrized,
        }
    }

    /// First pair of grid members that meet inside the half-plane.
    pub fn grid_intersection(&self) -> Option<(usize, usize)> {
        let m = self.local_members();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if approx_crossings(&m[i], &m[j]) > 0 {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// First index `j` where member `j` fails to separate its neighbours.
    pub fn betweenness_violation(&self) -> Option<usize> {
        let m = self.local_members();
        let sides = forward_signs(&m);
        for j in 1..m.len().saturating_sub(1) {
            let ahead = m[j + 1]
                .sample(24)
                .iter()
                .all(|&(x, y)| sides[j] * m[j].eval(x, y) > -SIDE_TOL);
            let behind = m[j - 1]
                .sample(24)
                .iter()
                .all(|&(x, y)| sides[j] * m[j].eval(x, y) < SIDE_TOL);
            if !(ahead && behind) {
                return Some(j);
            }
        }
        None
    }
}

const SIDE_TOL: f64 = 1e-14;

/// For each member, the sign of `F_j` on the side where later members lie.
fn forward_signs(m: &[ApproxCircle]) -> Vec<f64> {
    let mut s = vec![1.0; m.len()];
    for j in 0..m.len().saturating_sub(1) {
        let pts = m[j + 1].sample(9);
        let (x, y) = pts[pts.len() / 2];
        s[j] = if m[j].eval(x, y) >= 0.0 { 1.0 } else { -1.0 };
    }
    if m.len() > 1 {
        s[m.len() - 1] = s[m.len() - 2];
    }
    s
}

/// Number of points where two floating circles cross inside `y > 0`.
pub fn approx_crossings(c1: &ApproxCircle, c2: &ApproxCircle) -> usize {
    let p = c1.normalized(0.0);
    let r = c2.normalized(0.0);
    let eps = 1e-13;
    let pts: Vec<(f64, f64)> = if p.a.abs() < eps && r.a.abs() < eps {
        let det = p.b * r.c - r.b * p.c;
        if det.abs() < eps {
            vec![]
        } else {
            vec![((p.c * r.d - r.c * p.d) / det, (p.d * r.b - r.d * p.b) / det)]
        }
    } else {
        let (circ, line) = if p.a.abs() < eps {
            (r, p)
        } else if r.a.abs() < eps {
            (p, r)
        } else {
            let axis = ApproxCircle::new(
                0.0,
                r.a * p.b - p.a * r.b,
                r.a * p.c - p.a * r.c,
                r.a * p.d - p.a * r.d,
            );
            (p, axis)
        };
        let (u, v, w) = (line.b, line.c, line.d);
        let n = (u * u + v * v).sqrt();
        if n < eps {
            return 0;
        }
        let (u, v, w) = (u / n, v / n, w / n);
        // nearest point of the line to the circle center, then ± along it
        let (cx, cy) = (-circ.b / (2.0 * circ.a), -circ.c / (2.0 * circ.a));
        let r2 =
            (circ.b * circ.b + circ.c * circ.c - 4.0 * circ.a * circ.d) / (4.0 * circ.a * circ.a);
        let dist = u * cx + v * cy + w;
        let h2 = r2 - dist * dist;
        if h2 <= 0.0 {
            vec![]
        } else {
            let (fx, fy) = (cx - dist * u, cy - dist * v);
            let h = h2.sqrt();
            vec![(fx - h * v, fy + h * u), (fx + h * v, fy - h * u)]
        }
    };
    pts.into_iter().filter(|&(_, y)| y > 1e-12).count()
}

fn sign_of(v: f64) -> f64 {
    if v >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Extrapolated local limit at `t = 1` and an error estimate.
fn extrapolate(fam: &ContinuousFamily) -> (ApproxCircle, f64) {
    let g = &fam.sample_grid;
    let n = g.len();
    let pick = [n - 3, n - 2, n - 1];
    let mut vs: Vec<[f64; 4]> = Vec::new();
    for &j in &pick {
        let mut v = fam.local_at(g[j]).normalized(0.0).coeffs();
        if let Some(prev) = vs.last() {
            let dot: f64 = v.iter().zip(prev.iter()).map(|(a, b)| a * b).sum();
            if dot < 0.0 {
                v = v.map(|x| -x);
            }
        }
        vs.push(v);
    }
    let s: Vec<f64> = pick.iter().map(|&j| 1.0 - g[j]).collect();
    // Lagrange weights at s = 0
    let w = |i: usize, k: usize, l: usize| s[k] * s[l] / ((s[i] - s[k]) * (s[i] - s[l]));
    let (w0, w1, w2) = (w(0, 1, 2), w(1, 0, 2), w(2, 0, 1));
    let quad: Vec<f64> = (0..4)
        .map(|c| w0 * vs[0][c] + w1 * vs[1][c] + w2 * vs[2][c])
        .collect();
    let lin: Vec<f64> = (0..4)
        .map(|c| (s[2] * vs[1][c] - s[1] * vs[2][c]) / (s[2] - s[1]))
        .collect();
    let err = quad
        .iter()
        .zip(lin.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    (ApproxCircle::new(quad[0], quad[1], quad[2], quad[3]), err)
}

#[derive(Clone, Copy, PartialEq, Debug)]
enum LimitShape {
    Degenerate,
    Horocycle,
    Other,
    Ambiguous,
}

fn limit_shape(l: &ApproxCircle, err: f64) -> LimitShape {
    let v = l.normalized(0.0);
    let tol = (10.0 * err).max(1e-8);
    let degenerate = (v.b * v.b + v.c * v.c - 4.0 * v.a * v.d)
        .abs()
        .min((v.a * v.a + v.b * v.b + v.d * v.d).sqrt());
    let horo = (v.a * v.a + v.b * v.b)
        .sqrt()
        .min((v.b * v.b - 4.0 * v.a * v.d).abs());
    let margin = 1000.0;
    if degenerate < tol {
        LimitShape::Degenerate
    } else if degenerate < margin * tol {
        LimitShape::Ambiguous
    } else if horo < tol {
        LimitShape::Horocycle
    } else if horo < margin * tol {
        LimitShape::Ambiguous
    } else {
        LimitShape::Other
    }
}

/// Classifies where the family goes as `t → 1`.
///
/// The limit is extrapolated in coefficient space from the end of the grid; a
/// degenerate limit (the boundary line or a point) means the members sweep
/// out a whole component. The decision is then cross-checked: a limit curve
/// must lie beyond every member, no probe beyond it may be swept, and for a
/// sweeping family every probe ahead of the first member must be swept. An
/// unclear decision doubles the grid, twice, before giving up.
pub fn classify_family_limit(
    fam: &ContinuousFamily,
    probes: &[ApproxCircle],
) -> Result<FamilyLimit> {
    let inverse = fam.frame.inverse();
    let local_probes: Vec<ApproxCircle> = fam
        .probes
        .iter()
        .chain(probes.iter())
        .map(|p| inverse.apply_circle(p).normalized(0.0))
        .collect();
    let mut last_reason = String::new();
    let base = fam.sample_grid.len().max(8);
    for attempt in 0..3 {
        let f = fam.with_grid(base << attempt);
        let (limit, err) = extrapolate(&f);
        let shape = limit_shape(&limit, err);
        let members = f.local_members();
        let sides = forward_signs(&members);
        let swept = |p: &ApproxCircle| {
            let pts = p.sample(24);
            let ahead_of_first = pts
                .iter()
                .all(|&(x, y)| sides[0] * members[0].eval(x, y) > SIDE_TOL);
            ahead_of_first
                && (1..members.len()).any(|j| {
                    pts.iter()
                        .all(|&(x, y)| sides[j] * members[j].eval(x, y) < -SIDE_TOL)
                })
        };
        let ahead_of_first = |p: &ApproxCircle| {
            p.sample(24)
                .iter()
                .all(|&(x, y)| sides[0] * members[0].eval(x, y) > SIDE_TOL)
        };
        match shape {
            LimitShape::Ambiguous => {
                last_reason =
                    format!("limit {limit:?} too close to a class boundary (error {err:.2e})");
                continue;
            }
            LimitShape::Degenerate => {
                if let Some(p) = local_probes.iter().find(|p| ahead_of_first(p) && !swept(p)) {
                    last_reason = format!("probe {p:?} is ahead of the family but never swept");
                    continue;
                }
                return Ok(FamilyLimit::FoliatesComponent);
            }
            LimitShape::Horocycle | LimitShape::Other => {
                let l = limit.normalized(0.0);
                let cut = members.len() * 9 / 10;
                let back = {
                    let pts = members[0].sample(9);
                    let (x, y) = pts[pts.len() / 2];
                    -sign_of(l.eval(x, y))
                };
                let l_pts = l.sample(24);
                let beyond_members = (0..cut).all(|j| {
                    l_pts
                        .iter()
                        .all(|&(x, y)| sides[j] * members[j].eval(x, y) > -SIDE_TOL)
                });
                if !beyond_members {
                    last_reason = "limit curve is not beyond the family".into();
                    continue;
                }
                let beyond_limit = |p: &ApproxCircle| {
                    p.sample(24)
                        .iter()
                        .all(|&(x, y)| back * l.eval(x, y) > 1e-9)
                };
                if let Some(p) = local_probes.iter().find(|p| beyond_limit(p) && swept(p)) {
                    last_reason = format!("probe {p:?} beyond the limit is swept");
                    continue;
                }
                let actual = fam.frame.apply_circle(&l).normalized(1e-12);
                return Ok(if shape == LimitShape::Horocycle {
                    FamilyLimit::HorocycleLimit(actual)
                } else {
                    FamilyLimit::HypercycleOrGeodesicLimit(actual)
                });
            }
        }
    }
    Err(Error::Indeterminate {
        reason: last_reason,
        candidates: "foliates-component, horocycle-limit, hypercycle-or-geodesic-limit".into(),
    })
}

/// The family `h_t` interpolating from `hprime` (at `t = 0`) to the
/// horocycle `h` (as `t → 1`).
///
/// In the local frame `h` is the line `y = S` and `hprime` the circle through
/// `±β` and `iτ`; member `t` passes through `±β^{1/(1−t)}` and
/// `i S e^{a(t−1)}` with `a = ln(S/τ)`. Normally `S = 1`; when that leaves
/// `β ≤ 1` the frame is dilated so that `β = 2`-ish and the family is flagged.
pub fn disj_family(h: &Curve, hprime: &Curve) -> Result<ContinuousFamily> {
    if h.kind() != CurveKind::Horocycle || hprime.kind() != CurveKind::Hypercycle {
        return invalid("disj_family needs a horocycle and a hypercycle");
    }
    if !intersection_pattern(h, hprime).is_disjoint() {
        return invalid(format!("{h} and {hprime} intersect"));
    }
    let to_infinity = match h.center().unwrap() {
        BoundaryPoint::Infinity => Isometry::identity(),
        p => two_point_normalizer(p, &BoundaryPoint::Infinity)?,
    };
    let line = to_infinity.apply_curve(h);
    let s0 = line.size().unwrap().clone();
    let hp = to_infinity.apply_curve(hprime);
    let [a, b, _, _] = hp.circle().coeffs();
    if a.is_zero() {
        return invalid("the hypercycle ends at the horocycle's center");
    }
    let shift = Isometry::translation(b / (qi(2) * &a));
    let hp = shift.apply_curve(&hp);
    let [a, _, c, d] = hp.circle().coeffs();
    // circle x² + y² + (c/a) y + d/a = 0: center (0, k), endpoints ±√(−d/a)
    let half_width2 = -(&d / &a);
    let k = -(&c / (qi(2) * &a));
    let top = to_f64(&k) + to_f64(&(&k * &k + &half_width2)).sqrt();
    if top >= to_f64(&s0) {
        return invalid(format!("{hprime} lies on the horoball side of {h}"));
    }
    // choose the dilation: 1/s0, or larger so that the endpoints exceed ±1
    let mut lambda = s0.recip();
    let mut reparametrized = false;
    if &lambda * &lambda * &half_width2 <= qi(1) {
        lambda = rational_near(2.0 / to_f64(&half_width2).sqrt(), 1 << 20);
        if &lambda * &lambda * &half_width2 <= qi(1) {
            lambda = &lambda * qi(2);
        }
        reparametrized = true;
    }
    let scale = Isometry::dilation(lambda.clone())?;
    let normalizer = scale.compose(&shift).compose(&to_infinity);
    let beta = to_f64(&(&lambda * &lambda * &half_width2)).sqrt();
    let big_s = to_f64(&(&lambda * &s0));
    let tau = to_f64(&lambda) * top;
    let a_param = (big_s / tau).ln();
    let ln_beta = beta.ln();
    let local: MemberFn = Arc::new(move |t: f64| {
        let s = 1.0 - t;
        let y = big_s * (-a_param * s).exp();
        let inv_b2 = if s <= 0.0 {
            0.0
        } else {
            (-2.0 * ln_beta / s).exp()
        };
        ApproxCircle::new(inv_b2, 0.0, (1.0 - y * y * inv_b2) / y, -1.0)
    });
    let frame = normalizer.inverse().to_f64();
    let mut fam = ContinuousFamily::new("disj", frame, local, DEFAULT_GRID);
    fam.declared_limit = Some(FamilyLimit::HorocycleLimit(
        h.circle().to_approx().normalized(1e-12),
    ));
    fam.reparametrized = reparametrized;
    // lines between hprime's top and h are swept; lines inside the horoball are not
    fam.probes = [0.25, 0.5, 0.75, 0.95, 1.5, 3.0]
        .iter()
        .map(|&u| {
            let height = tau + (big_s - tau) * u;
            frame.apply_circle(&ApproxCircle::new(0.0, 0.0, 1.0, -height))
        })
        .collect();
    Ok(fam)
}

/// Rays from `0` at angle `(π/4)(1 − t)`; they sweep the sector below the
/// first ray.
pub fn ray_sweep_family() -> ContinuousFamily {
    let local: MemberFn = Arc::new(|t: f64| {
        let alpha = FRAC_PI_4 * (1.0 - t);
        ApproxCircle::new(0.0, alpha.sin(), -alpha.cos(), 0.0)
    });
    let mut fam = ContinuousFamily::new("ray-sweep", IsometryF64::identity(), local, DEFAULT_GRID);
    fam.declared_limit = Some(FamilyLimit::FoliatesComponent);
    fam.probes = (1..8)
        .map(|k| {
            let beta = FRAC_PI_4 * k as f64 / 8.0;
            ApproxCircle::new(0.0, beta.sin(), -beta.cos(), 0.0)
        })
        .collect();
    fam
}

/// Hypercycles with endpoints `±1` whose angle with the boundary falls from
/// `π/2` (the geodesic) to `theta_end`.
pub fn fixed_endpoint_family(theta_end: f64) -> Result<ContinuousFamily> {
    if !(theta_end >= 0.0 && theta_end < FRAC_PI_2) {
        return invalid(format!("limit angle {theta_end} outside [0, π/2)"));
    }
    let member =
        move |theta: f64| ApproxCircle::new(theta.sin(), 0.0, 2.0 * theta.cos(), -theta.sin());
    let local: MemberFn = Arc::new(move |t: f64| member(FRAC_PI_2 - (FRAC_PI_2 - theta_end) * t));
    let mut fam = ContinuousFamily::new(
        "fixed-endpoints",
        IsometryF64::identity(),
        local,
        DEFAULT_GRID,
    );
    fam.declared_limit = Some(if theta_end > 0.0 {
        FamilyLimit::HypercycleOrGeodesicLimit(member(theta_end).normalized(1e-12))
    } else {
        FamilyLimit::FoliatesComponent
    });
    let mut angles: Vec<f64> = [0.2, 0.5, 0.8]
        .iter()
        .map(|&u| theta_end + (FRAC_PI_2 - theta_end) * u)
        .collect();
    if theta_end > 0.0 {
        angles.extend([0.3, 0.7].iter().map(|&u| theta_end * u));
    }
    fam.probes = angles.into_iter().map(member).collect();
    Ok(fam)
}

/// The default instance: limit angle `π/8`.
pub fn fixed_endpoint_default() -> ContinuousFamily {
    fixed_endpoint_family(FRAC_PI_8).expect("π/8 is a valid limit angle")
}

/// A disjoint (horocycle, hypercycle) pair built in the local frame of
/// [`disj_family`] from rational data: `h(∞, 1)` and the hypercycle through
/// `±b` and `iτ`, moved by `iso`.
pub fn disjoint_pair(b: &Rational, tau: &Rational, iso: &Isometry) -> Result<(Curve, Curve)> {
    if !b.is_positive() || !tau.is_positive() || tau >= &qi(1) {
        return invalid("need b > 0 and 0 < τ < 1");
    }
    let h = Curve::from_coeffs(qi(0), qi(0), qi(1), qi(-1))?;
    // x² + y² + c y − b² = 0 through iτ
    let c = (b * b - tau * tau) / tau;
    let hp = Curve::from_coeffs(qi(1), qi(0), c, -(b * b))?;
    if hp.kind() != CurveKind::Hypercycle {
        return invalid("τ = b gives a geodesic");
    }
    Ok((iso.apply_curve(&h), iso.apply_curve(&hp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::curve::make_horocycle;
    use crate::model::number::q;

    fn example_pair() -> (Curve, Curve) {
        let h = make_horocycle(&BoundaryPoint::Infinity, &qi(1)).unwrap();
        // endpoints ±2 through i/2: x² + y² + (15/2) y − 4 = 0
        let hp = Curve::from_coeffs(qi(1), qi(0), q(15, 2), qi(-4)).unwrap();
        (h, hp)
    }

    #[test]
    fn grid_is_chebyshev() {
        let g = chebyshev_grid(65);
        assert_eq!(g.len(), 65);
        assert_eq!(g[0], 0.0);
        assert!(g[64] < 1.0 && g[64] > 0.999);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn disj_family_matches_the_formula() {
        let (h, hp) = example_pair();
        let fam = disj_family(&h, &hp).unwrap();
        assert!(!fam.reparametrized);
        let h0 = fam.curve_at(0.0);
        assert!(h0.coefficient_distance(&hp.circle().to_approx()) < 1e-14);
        let half = fam.curve_at(0.5);
        let ends = half.boundary_points(1e-12);
        assert!((ends[0] + 4.0).abs() < 1e-9 && (ends[1] - 4.0).abs() < 1e-9);
        assert!(half.eval(0.0, 2f64.powf(-0.5)).abs() < 1e-12);
        let late = fam.curve_at(0.999);
        assert!(late.coefficient_distance(&h.circle().to_approx()) < 1e-2);
    }

    #[test]
    fn disj_family_members_are_disjoint_and_ordered() {
        let (h, hp) = example_pair();
        let fam = disj_family(&h, &hp).unwrap();
        assert_eq!(fam.grid_intersection(), None);
        assert_eq!(fam.betweenness_violation(), None);
    }

    #[test]
    fn disj_family_converges_to_the_horocycle() {
        let (h, hp) = example_pair();
        let fam = disj_family(&h, &hp).unwrap();
        let lim = classify_family_limit(&fam, &[]).unwrap();
        assert!(
            lim.agrees_with(fam.declared_limit.as_ref().unwrap(), 1e-6),
            "{lim}"
        );
    }

    #[test]
    fn disj_family_in_general_position() {
        let iso = Isometry::from_ints(2, -1, 1, 3, crate::model::isometry::Orientation::Preserving)
            .unwrap();
        let (h, hp) = disjoint_pair(&q(1, 2), &q(1, 5), &iso).unwrap();
        let fam = disj_family(&h, &hp).unwrap();
        assert!(fam.reparametrized);
        assert!(
            fam.curve_at(0.0)
                .coefficient_distance(&hp.circle().to_approx())
                < 1e-12
        );
        let lim = classify_family_limit(&fam, &[]).unwrap();
        match &lim {
            FamilyLimit::HorocycleLimit(c) => {
                assert!(c.coefficient_distance(&h.circle().to_approx()) < 1e-6)
            }
            other => panic!("unexpected {other}"),
        }
        assert_eq!(fam.grid_intersection(), None);
    }

    #[test]
    fn disj_family_rejects_bad_inputs() {
        let (h, _) = example_pair();
        let crossing = Curve::from_ints(0, 1, -1, 0).unwrap();
        assert!(disj_family(&h, &crossing).is_err());
        // touches y = 1 from below
        let above = Curve::from_coeffs(qi(1), qi(-4), qi(3), qi(0)).unwrap();
        assert_eq!(above.kind(), CurveKind::Hypercycle);
        assert!(disj_family(&h, &above).is_err());
    }

    #[test]
    fn ray_sweep_foliates() {
        let fam = ray_sweep_family();
        assert_eq!(
            classify_family_limit(&fam, &[]).unwrap(),
            FamilyLimit::FoliatesComponent
        );
        assert_eq!(fam.betweenness_violation(), None);
    }

    #[test]
    fn fixed_endpoints_converge_to_a_hypercycle() {
        let fam = fixed_endpoint_default();
        let lim = classify_family_limit(&fam, &[]).unwrap();
        assert!(
            lim.agrees_with(fam.declared_limit.as_ref().unwrap(), 1e-6),
            "{lim}"
        );
        let flat = fixed_endpoint_family(0.0).unwrap();
        assert_eq!(
            classify_family_limit(&flat, &[]).unwrap(),
            FamilyLimit::FoliatesComponent
        );
    }

    #[test]
    fn crossing_counts() {
        let a = ApproxCircle::new(1.0, 0.0, 0.0, -1.0);
        let b = ApproxCircle::new(0.0, 1.0, 0.0, 0.0);
        assert_eq!(approx_crossings(&a, &b), 1);
        let c = ApproxCircle::new(1.0, -4.0, -2.0, 3.0);
        let d = ApproxCircle::new(0.0, 1.0, -1.0, 0.0);
        assert_eq!(approx_crossings(&c, &d), 2);
        let e = ApproxCircle::new(0.0, 0.0, 1.0, -2.0);
        let f = ApproxCircle::new(1.0, 0.0, -1.0, 0.0);
        assert_eq!(approx_crossings(&e, &f), 0);
    }
}
