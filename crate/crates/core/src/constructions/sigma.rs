//! The center swap `σ_{p,q}` on horocycles.

use crate::error::{invalid, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::curve::{make_horocycle, Curve, CurveKind};
use crate::predicates::pattern::intersection_pattern;

/// Exchanges the horocycles centered at `p` with those centered at `q`,
/// keeping sizes; every other horocycle is fixed.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterSwap {
    pub p: BoundaryPoint,
    pub q: BoundaryPoint,
    /// Set when `p = q`, in which case the map is the identity.
    pub identity: bool,
}

pub fn sigma_center_swap(p: &BoundaryPoint, q: &BoundaryPoint) -> Result<CenterSwap> {
    for x in [p, q] {
        if !matches!(x, BoundaryPoint::Finite(_)) {
            return invalid(format!("swap centers must be finite rationals, got {x}"));
        }
    }
    Ok(CenterSwap {
        p: p.clone(),
        q: q.clone(),
        identity: p == q,
    })
}

impl CenterSwap {
    pub fn map_center(&self, c: &BoundaryPoint) -> BoundaryPoint {
        if *c == self.p {
            self.q.clone()
        } else if *c == self.q {
            self.p.clone()
        } else {
            c.clone()
        }
    }

    pub fn apply(&self, h: &Curve) -> Result<Curve> {
        if h.kind() != CurveKind::Horocycle {
            return invalid(format!("expected a horocycle, got {h}"));
        }
        make_horocycle(&self.map_center(h.center().unwrap()), h.size().unwrap())
    }

    /// First pair `(i, j)` whose tangency differs before and after the swap.
    pub fn tangency_violation(&self, curves: &[Curve]) -> Result<Option<(usize, usize)>> {
        let images = curves
            .iter()
            .map(|h| self.apply(h))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..curves.len() {
            for j in i + 1..curves.len() {
                let before = intersection_pattern(&curves[i], &curves[j]).tangent;
                let after = intersection_pattern(&images[i], &images[j]).tangent;
                if before != after {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}
