//! Nesting of horocycles, linked boundary pairs, and common endpoints.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::model::boundary::{on_open_arc, BoundaryPoint};
use crate::model::curve::{Curve, CurveKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HoroOrder {
    LessOrEqual,
    GreaterOrEqual,
    Equal,
    Incomparable,
}

/// Compares two horocycles by inclusion of their horoballs.
///
/// The horoball of a horizontal line is the region above it, so for center
/// `∞` the higher line is the smaller horocycle.
pub fn horocycle_leq(h1: &Curve, h2: &Curve) -> Result<HoroOrder> {
    for h in [h1, h2] {
        if h.kind() != CurveKind::Horocycle {
            return invalid(format!("expected a horocycle, got {h}"));
        }
    }
    if h1.center() != h2.center() {
        return Ok(HoroOrder::Incomparable);
    }
    let (s1, s2) = (h1.size().unwrap(), h2.size().unwrap());
    let ord = match h1.center() {
        Some(BoundaryPoint::Infinity) => s2.cmp(s1),
        _ => s1.cmp(s2),
    };
    Ok(match ord {
        Ordering::Less => HoroOrder::LessOrEqual,
        Ordering::Greater => HoroOrder::GreaterOrEqual,
        Ordering::Equal => HoroOrder::Equal,
    })
}

/// True when the two pairs interleave on `ℝ ∪ {∞}`.
pub fn linked(pair1: [&BoundaryPoint; 2], pair2: [&BoundaryPoint; 2]) -> Result<bool> {
    let all = [pair1[0], pair1[1], pair2[0], pair2[1]];
    for i in 0..4 {
        for j in i + 1..4 {
            if all[i] == all[j] {
                return invalid(format!("repeated boundary point {}", all[i]));
            }
        }
    }
    let inside = |x: &BoundaryPoint| on_open_arc(pair1[0], pair1[1], x);
    Ok(inside(pair2[0]) != inside(pair2[1]))
}

/// True when the two curves have the same pair of endpoints.
pub fn same_endpoints(h1: &Curve, h2: &Curve) -> Result<bool> {
    for h in [h1, h2] {
        if h.endpoints().len() != 2 {
            return invalid(format!("{h} does not have two endpoints"));
        }
    }
    Ok(h1.endpoints() == h2.endpoints())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::curve::{make_geodesic, make_horocycle};
    use crate::model::number::{q, qi};
    use crate::predicates::pattern::intersection_pattern;

    fn bp(n: i64) -> BoundaryPoint {
        BoundaryPoint::Finite(qi(n))
    }

    #[test]
    fn nesting_examples() {
        let h = |p: BoundaryPoint, r| make_horocycle(&p, &r).unwrap();
        let inf = BoundaryPoint::Infinity;
        assert_eq!(
            horocycle_leq(&h(bp(0), q(1, 2)), &h(bp(0), qi(1))).unwrap(),
            HoroOrder::LessOrEqual
        );
        assert_eq!(
            horocycle_leq(&h(bp(0), qi(1)), &h(inf.clone(), qi(3))).unwrap(),
            HoroOrder::Incomparable
        );
        assert_eq!(
            horocycle_leq(&h(inf.clone(), qi(3)), &h(inf.clone(), qi(1))).unwrap(),
            HoroOrder::LessOrEqual
        );
        assert_eq!(
            horocycle_leq(&h(inf.clone(), qi(1)), &h(inf, qi(1))).unwrap(),
            HoroOrder::Equal
        );
        let g = make_geodesic(&bp(0), &bp(1)).unwrap();
        assert!(horocycle_leq(&g, &h(bp(0), qi(1))).is_err());
    }

    #[test]
    fn linked_examples() {
        let inf = BoundaryPoint::Infinity;
        assert!(linked([&bp(0), &inf], [&bp(-1), &bp(1)]).unwrap());
        assert!(!linked([&bp(0), &bp(1)], [&bp(2), &bp(3)]).unwrap());
        assert!(linked([&bp(0), &bp(2)], [&bp(1), &inf]).unwrap());
        assert!(linked([&bp(0), &bp(0)], [&bp(1), &inf]).is_err());
        let cross = |a: &BoundaryPoint, b: &BoundaryPoint, c: &BoundaryPoint, d: &BoundaryPoint| {
            let p =
                intersection_pattern(&make_geodesic(a, b).unwrap(), &make_geodesic(c, d).unwrap());
            p.interior_count == 1
        };
        assert!(cross(&bp(0), &bp(2), &bp(1), &inf));
        assert!(!cross(&bp(0), &bp(1), &bp(2), &bp(3)));
    }

    #[test]
    fn endpoint_sets() {
        let y_eq_x = Curve::from_ints(0, 1, -1, 0).unwrap();
        let y_eq_2x = Curve::from_ints(0, 2, -1, 0).unwrap();
        assert!(same_endpoints(&y_eq_x, &y_eq_2x).unwrap());
        let hyp = Curve::from_coeffs(qi(1), qi(0), q(-3, 4), q(-1, 4)).unwrap();
        let geo = make_geodesic(
            &BoundaryPoint::Finite(q(-1, 2)),
            &BoundaryPoint::Finite(q(1, 2)),
        )
        .unwrap();
        assert!(same_endpoints(&hyp, &geo).unwrap());
        let c13 = Curve::from_ints(1, -4, -2, 3).unwrap();
        assert!(!same_endpoints(&y_eq_x, &c13).unwrap());
        let horo = make_horocycle(&bp(0), &qi(1)).unwrap();
        assert!(same_endpoints(&horo, &geo).is_err());
    }
}
