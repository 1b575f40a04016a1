//! Simple earthquakes along one geodesic fault.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::constructions::witness::snap_to_curve;
use crate::error::{invalid, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::circle::GeneralizedCircle;
use crate::model::curve::{make_geodesic, Curve, CurveKind};
use crate::model::isometry::{two_point_normalizer, Isometry};
use crate::model::number::{qi, rational_near, Rational};
use crate::model::point::UhpPoint;
use crate::predicates::pattern::intersection_pattern;

/// Which side of the oriented fault `p → q` moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn parse(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => invalid(format!("side must be left or right, got {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EarthquakeMap {
    fault: Curve,
    from: BoundaryPoint,
    to: BoundaryPoint,
    shear: Rational,
    moved_side: Side,
    // sends `to` to ∞ and `from` to 0, so the fault becomes the upward
    // imaginary axis and the left side becomes Re < 0
    frame: Isometry,
    motion: Isometry,
}

impl EarthquakeMap {
    /// Fault oriented from `from` to `to`; the moved side is taken relative
    /// to that orientation.
    pub fn new(
        from: &BoundaryPoint,
        to: &BoundaryPoint,
        shear: Rational,
        moved_side: Side,
    ) -> Result<Self> {
        if !shear.is_positive() || shear.is_one() {
            return invalid(format!(
                "shear {shear} must be positive and different from 1"
            ));
        }
        let fault = make_geodesic(from, to)?;
        let frame = two_point_normalizer(to, from)?;
        let motion = frame
            .inverse()
            .compose(&Isometry::dilation(shear.clone())?)
            .compose(&frame);
        Ok(EarthquakeMap {
            fault,
            from: from.clone(),
            to: to.clone(),
            shear,
            moved_side,
            frame,
            motion,
        })
    }

    pub fn fault(&self) -> &Curve {
        &self.fault
    }

    pub fn endpoints(&self) -> (&BoundaryPoint, &BoundaryPoint) {
        (&self.from, &self.to)
    }

    pub fn shear(&self) -> &Rational {
        &self.shear
    }

    pub fn moved_side(&self) -> Side {
        self.moved_side
    }

    /// The isometry applied on the moved side.
    pub fn motion(&self) -> &Isometry {
        &self.motion
    }

    fn moves_sign(&self, re: Ordering) -> bool {
        match self.moved_side {
            Side::Left => re == Ordering::Less,
            Side::Right => re == Ordering::Greater,
        }
    }

    /// Whether an interior point is moved. Points of the fault stay.
    pub fn moves_point(&self, z: &UhpPoint) -> bool {
        let re = match z {
            UhpPoint::Exact { x, y } => self.frame.apply_exact(x, y).0.cmp(&Rational::zero()),
            UhpPoint::Approx { .. } => {
                let (x, _) = self.frame.to_f64().apply(z.to_f64().0, z.to_f64().1);
                x.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
            }
        };
        self.moves_sign(re)
    }

    /// Whether a boundary point is moved. The fault endpoints stay.
    pub fn moves_boundary(&self, x: &BoundaryPoint) -> bool {
        match self.frame.apply_boundary(x) {
            BoundaryPoint::Infinity => false,
            BoundaryPoint::Finite(v) => self.moves_sign(v.cmp(&Rational::zero())),
            BoundaryPoint::Algebraic(v) => self.moves_sign(v.sign()),
        }
    }

    pub fn apply_point(&self, z: &UhpPoint) -> UhpPoint {
        if self.moves_point(z) {
            self.motion.apply_point(z)
        } else {
            z.clone()
        }
    }

    pub fn apply_boundary(&self, x: &BoundaryPoint) -> BoundaryPoint {
        if self.moves_boundary(x) {
            self.motion.apply_boundary(x)
        } else {
            x.clone()
        }
    }

    pub fn apply_exact(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        match self.apply_point(&UhpPoint::Exact {
            x: x.clone(),
            y: y.clone(),
        }) {
            UhpPoint::Exact { x, y } => (x, y),
            UhpPoint::Approx { .. } => unreachable!("exact points stay exact"),
        }
    }
}

impl fmt::Display for EarthquakeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.moved_side {
            Side::Left => "left",
            Side::Right => "right",
        };
        write!(
            f,
            "earthquake fault ({}, {}) shear {} moving {}",
            self.from, self.to, self.shear, side
        )
    }
}

/// Applies the earthquake to an interior point.
pub fn eq_apply(e: &EarthquakeMap, z: &UhpPoint) -> UhpPoint {
    e.apply_point(z)
}

/// Applies the boundary map of the earthquake.
pub fn eq_apply_boundary(e: &EarthquakeMap, x: &BoundaryPoint) -> BoundaryPoint {
    e.apply_boundary(x)
}

/// The geodesic spanned by the boundary images of the endpoints of `g`.
pub fn eq_geodesic_image(e: &EarthquakeMap, g: &Curve) -> Result<Curve> {
    if g.kind() != CurveKind::Geodesic {
        return invalid(format!("{g} is not a geodesic"));
    }
    let ends = g.endpoints();
    make_geodesic(&e.apply_boundary(&ends[0]), &e.apply_boundary(&ends[1]))
}

/// Outcome of [`pointwise_image_is_curve`].
#[derive(Clone, Debug)]
pub struct CocircularityReport {
    pub is_curve: bool,
    pub images: Vec<(Rational, Rational)>,
    /// Four image points on no common generalized circle.
    pub witness: Option<[(Rational, Rational); 4]>,
    /// The nonzero determinant certifying the witness.
    pub determinant: Option<Rational>,
}

/// A rational point of `c` for anchoring exact samples.
fn rational_anchor(c: &Curve) -> Option<(Rational, Rational)> {
    if let Some(BoundaryPoint::Finite(p)) = c.center() {
        return Some((p.clone(), qi(0)));
    }
    c.endpoints().iter().find_map(|e| match e {
        BoundaryPoint::Finite(p) => Some((p.clone(), qi(0))),
        _ => None,
    })
}

/// Rational points of `c` spread along its arc.
pub fn exact_samples(c: &Curve, n: usize) -> Result<Vec<(Rational, Rational)>> {
    let approx = c.circle().to_approx();
    let targets = approx.sample(n);
    let [a, b, cc, d] = c.circle().coeffs();
    let mut out: Vec<(Rational, Rational)> = Vec::new();
    for (tx, ty) in targets {
        let p = if a.is_zero() {
            if cc.is_zero() {
                Some((-&d / &b, rational_near(ty, 1 << 20)))
            } else {
                let x = rational_near(tx, 1 << 20);
                let y = -(&b * &x + &d) / &cc;
                Some((x, y))
            }
        } else {
            let anchor = rational_anchor(c);
            anchor.and_then(|base| {
                snap_to_curve(c, &base, (tx, ty), 1e-6 * (1.0 + tx.abs() + ty.abs()))
            })
        };
        if let Some(p) = p {
            if p.1.is_positive() && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    if out.len() < 4 {
        return invalid(format!("fewer than 4 rational samples of {c}"));
    }
    Ok(out)
}

/// Row `(x² + y², x, y, 1)` of the incidence system.
fn incidence_row(p: &(Rational, Rational)) -> [Rational; 4] {
    [&p.0 * &p.0 + &p.1 * &p.1, p.0.clone(), p.1.clone(), qi(1)]
}

fn det4(m: &[[Rational; 4]; 4]) -> Rational {
    let mut a = m.clone();
    let mut det = qi(1);
    for col in 0..4 {
        let pivot = match (col..4).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return qi(0),
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det = det * &a[col][col];
        for r in col + 1..4 {
            let f = &a[r][col] / &a[col][col];
            for k in col..4 {
                let v = &f * &a[col][k];
                a[r][k] -= v;
            }
        }
    }
    det
}

/// Indices of a maximal independent set of rows, in order.
fn independent_rows(rows: &[[Rational; 4]]) -> Vec<usize> {
    let mut basis: Vec<[Rational; 4]> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut picked = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        for (b, &p) in basis.iter().zip(pivots.iter()) {
            if !v[p].is_zero() {
                let f = &v[p] / &b[p];
                for k in 0..4 {
                    let t = &f * &b[k];
                    v[k] -= t;
                }
            }
        }
        if let Some(p) = (0..4).find(|&k| !v[k].is_zero()) {
            basis.push(v);
            pivots.push(p);
            picked.push(i);
            if picked.len() == 4 {
                break;
            }
        }
    }
    picked
}

/// Maps `sample_count` rational points of `c` through the earthquake and
/// decides whether the images lie on one generalized circle.
///
/// Rational points where `c` meets the fault are always among the samples,
/// since a curve touching the fault changes only there.
pub fn pointwise_image_is_curve(
    e: &EarthquakeMap,
    c: &Curve,
    sample_count: usize,
) -> Result<CocircularityReport> {
    let pattern = intersection_pattern(c, e.fault());
    let mut extra: Vec<(Rational, Rational)> = pattern
        .points
        .iter()
        .filter_map(|p| p.as_rational())
        .collect();
    let cuts: Vec<(f64, f64)> = pattern.points.iter().map(|p| p.to_uhp().to_f64()).collect();
    if !cuts.is_empty() {
        extra.extend(piece_samples(c, &cuts));
    }
    images_on_one_curve(|x, y| e.apply_exact(x, y), c, sample_count, &extra)
}

/// Rational points inside every piece of `c` cut out by the points `cuts` and
/// the boundary, so that a short piece is never missed.
fn piece_samples(c: &Curve, cuts: &[(f64, f64)]) -> Vec<(Rational, Rational)> {
    let approx = c.circle().to_approx();
    let mut targets: Vec<((f64, f64), f64)> = Vec::new();
    let ends: Vec<f64> = approx
        .boundary_points(1e-12)
        .into_iter()
        .filter(|x| x.is_finite())
        .collect();
    match approx.center_radius() {
        Some(((x0, y0), r)) => {
            let angle =
                |p: (f64, f64)| (p.1 - y0).atan2(p.0 - x0).rem_euclid(std::f64::consts::TAU);
            let mut breaks: Vec<f64> = cuts.iter().map(|&p| angle(p)).collect();
            breaks.extend(ends.iter().map(|&x| angle((x, 0.0))));
            breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for i in 0..breaks.len() {
                let lo = breaks[i];
                let mut hi = breaks[(i + 1) % breaks.len()];
                if hi <= lo {
                    hi += std::f64::consts::TAU;
                }
                for f in [0.25, 0.5, 0.75] {
                    let t = lo + f * (hi - lo);
                    targets.push(((x0 + r * t.cos(), y0 + r * t.sin()), r * (hi - lo)));
                }
            }
        }
        None => {
            let [_, b, cc, d] = approx.coeffs();
            let n = (b * b + cc * cc).sqrt();
            let foot = (-d * b / (n * n), -d * cc / (n * n));
            let dir = (-cc / n, b / n);
            let param = |p: (f64, f64)| (p.0 - foot.0) * dir.0 + (p.1 - foot.1) * dir.1;
            let mut breaks: Vec<f64> = cuts.iter().map(|&p| param(p)).collect();
            breaks.extend(ends.iter().map(|&x| param((x, 0.0))));
            breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let span = (breaks[breaks.len() - 1] - breaks[0]).max(1.0);
            let mut pieces: Vec<(f64, f64)> = breaks.windows(2).map(|w| (w[0], w[1])).collect();
            pieces.push((breaks[0] - span, breaks[0]));
            pieces.push((breaks[breaks.len() - 1], breaks[breaks.len() - 1] + span));
            for (lo, hi) in pieces {
                for f in [0.25, 0.5, 0.75] {
                    let t = lo + f * (hi - lo);
                    targets.push(((foot.0 + t * dir.0, foot.1 + t * dir.1), hi - lo));
                }
            }
        }
    }
    let anchor = rational_anchor(c);
    let mut out = Vec::new();
    for ((tx, ty), len) in targets {
        if ty <= 0.0 {
            continue;
        }
        let tol = (1e-3 * len)
            .min(0.25 * ty)
            .max(1e-13 * (1.0 + tx.abs() + ty.abs()));
        let p = match &anchor {
            _ if c.circle().a().is_zero() => snap_to_curve(c, &(qi(0), qi(1)), (tx, ty), tol),
            Some(base) => snap_to_curve(c, base, (tx, ty), tol),
            None => None,
        };
        if let Some(p) = p {
            if p.1.is_positive() && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// [`pointwise_image_is_curve`] for an arbitrary exact point map.
pub fn image_is_curve_under<F>(f: F, c: &Curve, sample_count: usize) -> Result<CocircularityReport>
where
    F: Fn(&Rational, &Rational) -> (Rational, Rational),
{
    images_on_one_curve(f, c, sample_count, &[])
}

fn images_on_one_curve<F>(
    f: F,
    c: &Curve,
    sample_count: usize,
    extra: &[(Rational, Rational)],
) -> Result<CocircularityReport>
where
    F: Fn(&Rational, &Rational) -> (Rational, Rational),
{
    if sample_count < 8 {
        return invalid(format!("sample count {sample_count} is below 8"));
    }
    let mut samples = exact_samples(c, sample_count)?;
    for p in extra {
        if !samples.contains(p) {
            samples.push(p.clone());
        }
    }
    let images: Vec<(Rational, Rational)> = samples.iter().map(|p| f(&p.0, &p.1)).collect();
    let rows: Vec<[Rational; 4]> = images.iter().map(incidence_row).collect();
    let idx = independent_rows(&rows);
    if idx.len() < 4 {
        return Ok(CocircularityReport {
            is_curve: true,
            images,
            witness: None,
            determinant: None,
        });
    }
    let w = [
        images[idx[0]].clone(),
        images[idx[1]].clone(),
        images[idx[2]].clone(),
        images[idx[3]].clone(),
    ];
    let det = det4(&[
        rows[idx[0]].clone(),
        rows[idx[1]].clone(),
        rows[idx[2]].clone(),
        rows[idx[3]].clone(),
    ]);
    debug_assert!(!det.is_zero());
    Ok(CocircularityReport {
        is_curve: false,
        images,
        witness: Some(w),
        determinant: Some(det),
    })
}

/// Whether four rational points lie on one generalized circle.
pub fn cocircular(p: &[(Rational, Rational); 4]) -> bool {
    let rows = [
        incidence_row(&p[0]),
        incidence_row(&p[1]),
        incidence_row(&p[2]),
        incidence_row(&p[3]),
    ];
    det4(&rows).is_zero()
}

/// The generalized circle through three rational points, if they are not
/// collinear.
pub fn circle_through(p: &[(Rational, Rational); 3]) -> Option<GeneralizedCircle> {
    // kernel of the 3×4 system by cofactors
    let rows: Vec<[Rational; 4]> = p.iter().map(incidence_row).collect();
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&k| k != skip).collect();
        let m = |r: usize, c: usize| rows[r][cols[c]].clone();
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    let v: Vec<Rational> = (0..4)
        .map(|k| if k % 2 == 0 { minor(k) } else { -minor(k) })
        .collect();
    GeneralizedCircle::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::curve::make_horocycle;
    use crate::model::number::q;

    fn doubling() -> EarthquakeMap {
        EarthquakeMap::new(
            &BoundaryPoint::Finite(qi(0)),
            &BoundaryPoint::Infinity,
            qi(2),
            Side::Left,
        )
        .unwrap()
    }

    fn ex(x: i64, y: i64) -> UhpPoint {
        UhpPoint::Exact { x: qi(x), y: qi(y) }
    }

    #[test]
    fn short_crossed_piece_is_sampled() {
        let e = EarthquakeMap::new(
            &BoundaryPoint::Finite(qi(-1)),
            &BoundaryPoint::Finite(q(-1, 2)),
            q(3, 2),
            Side::Right,
        )
        .unwrap();
        let h = Curve::from_ints(9, 6, -72, 1).unwrap();
        assert_eq!(intersection_pattern(&h, e.fault()).interior_count, 2);
        assert!(!pointwise_image_is_curve(&e, &h, 12).unwrap().is_curve);
    }

    #[test]
    fn pointwise_action() {
        let e = doubling();
        assert_eq!(eq_apply(&e, &ex(-1, 1)), ex(-2, 2));
        assert_eq!(eq_apply(&e, &ex(1, 1)), ex(1, 1));
        assert_eq!(eq_apply(&e, &ex(0, 3)), ex(0, 3));
        let b = |n: i64| BoundaryPoint::Finite(qi(n));
        assert_eq!(e.apply_boundary(&b(-3)), b(-6));
        assert_eq!(e.apply_boundary(&b(5)), b(5));
        assert_eq!(
            e.apply_boundary(&BoundaryPoint::Infinity),
            BoundaryPoint::Infinity
        );
        assert_eq!(e.apply_boundary(&b(0)), b(0));
    }

    #[test]
    fn right_side_and_reversed_fault() {
        // the same map described from the other end of the fault
        // shear is measured toward the end of the fault, so it inverts
        let e = EarthquakeMap::new(
            &BoundaryPoint::Infinity,
            &BoundaryPoint::Finite(qi(0)),
            q(1, 2),
            Side::Right,
        )
        .unwrap();
        assert_eq!(eq_apply(&e, &ex(-1, 1)), ex(-2, 2));
        assert_eq!(eq_apply(&e, &ex(1, 1)), ex(1, 1));
    }

    #[test]
    fn finite_fault() {
        // fault (-1, 1): the inside of the unit circle lies to the right of -1 → 1
        let e = EarthquakeMap::new(
            &BoundaryPoint::Finite(qi(-1)),
            &BoundaryPoint::Finite(qi(1)),
            qi(3),
            Side::Right,
        )
        .unwrap();
        let inside = UhpPoint::Exact {
            x: qi(0),
            y: q(1, 2),
        };
        assert!(e.moves_point(&inside));
        assert!(!e.moves_point(&ex(0, 2)));
        assert!(!e.moves_point(&ex(0, 1)));
        let moved = eq_apply(&e, &inside);
        assert!(e.fault().contains(&moved) == Some(false));
        assert_eq!(
            e.apply_boundary(&BoundaryPoint::Finite(qi(1))),
            BoundaryPoint::Finite(qi(1))
        );
    }

    #[test]
    fn geodesic_images() {
        let e = doubling();
        let b = |n: i64| BoundaryPoint::Finite(qi(n));
        let g = make_geodesic(&b(-1), &b(1)).unwrap();
        assert_eq!(
            eq_geodesic_image(&e, &g).unwrap(),
            make_geodesic(&b(-2), &b(1)).unwrap()
        );
        let g = make_geodesic(&b(1), &b(3)).unwrap();
        assert_eq!(eq_geodesic_image(&e, &g).unwrap(), g);
        assert_eq!(eq_geodesic_image(&e, e.fault()).unwrap(), *e.fault());
    }

    #[test]
    fn pointwise_images_of_curves() {
        let e = doubling();
        let crossing = make_horocycle(&BoundaryPoint::Finite(qi(-1)), &qi(1)).unwrap();
        let r = pointwise_image_is_curve(&e, &crossing, 16).unwrap();
        assert!(!r.is_curve);
        assert!(!cocircular(r.witness.as_ref().unwrap()));
        let away = make_horocycle(&BoundaryPoint::Finite(qi(3)), &qi(1)).unwrap();
        assert!(pointwise_image_is_curve(&e, &away, 16).unwrap().is_curve);
        let g = make_geodesic(
            &BoundaryPoint::Finite(qi(-1)),
            &BoundaryPoint::Finite(qi(1)),
        )
        .unwrap();
        assert!(!pointwise_image_is_curve(&e, &g, 16).unwrap().is_curve);
        assert!(pointwise_image_is_curve(&e, &g, 4).is_err());
    }

    #[test]
    fn circle_through_three_points() {
        let c = circle_through(&[(qi(-1), qi(0)), (qi(1), qi(0)), (qi(0), qi(1))]).unwrap();
        assert_eq!(c, GeneralizedCircle::from_ints(1, 0, 0, -1).unwrap());
    }
}
