//! Isometries realizing vertex permutations, and link preservation.

use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};
use crate::graphs::graph::{build_graph_with, DisjointnessGraph, GraphAutomorphism};
use crate::model::boundary::BoundaryPoint;
use crate::model::curve::{Curve, CurveKind};
use crate::model::isometry::{triple_normalizer, two_point_normalizer, Isometry};
use crate::model::number::Rational;
use crate::predicates::order::linked;

/// Rational boundary data of a curve list: endpoints and centers, first
/// appearance order.
fn boundary_data(curves: &[Curve]) -> Vec<BoundaryPoint> {
    let mut out: Vec<BoundaryPoint> = Vec::new();
    for c in curves {
        let pts = c.endpoints().iter().chain(c.center());
        for p in pts {
            if !matches!(p, BoundaryPoint::Algebraic(_)) && !out.contains(p) {
                out.push(p.clone());
            }
        }
    }
    out
}

fn realizes(iso: &Isometry, src: &[Curve], dst: &[Curve]) -> bool {
    src.iter()
        .zip(dst.iter())
        .all(|(s, d)| iso.apply_curve(s) == *d)
}

/// Scales `λ > 0` for which `z ↦ λz` (or `z ↦ −λz̄`) could carry `a` onto
/// `b`, both already normalized to share the points `0` and `∞`.
fn scale_candidates(a: &Curve, b: &Curve, reversing: bool) -> Vec<Rational> {
    if a.kind() != CurveKind::Horocycle || b.kind() != CurveKind::Horocycle {
        return Vec::new();
    }
    let (ca, cb) = (a.center().unwrap(), b.center().unwrap());
    let (sa, sb) = (a.size().unwrap(), b.size().unwrap());
    let lambda = match (ca, cb) {
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => sb / sa,
        (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) if x.is_zero() && y.is_zero() => {
            sb / sa
        }
        (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) if !x.is_zero() => {
            if reversing {
                -(y / x)
            } else {
                y / x
            }
        }
        _ => return Vec::new(),
    };
    if lambda.is_positive() {
        vec![lambda]
    } else {
        Vec::new()
    }
}

/// An isometry sending `src[i]` to `dst[i]` for every `i`, if one exists.
///
/// Candidates come from the boundary data of the configuration: a fixed
/// triple of source points is sent to every ordered triple of target points.
/// With fewer than three source points, the two points are matched and the
/// remaining scale is read off a horocycle.
pub fn realizing_isometry(src: &[Curve], dst: &[Curve]) -> Result<Option<Isometry>> {
    if src.len() != dst.len() {
        return invalid(format!(
            "{} source curves but {} targets",
            src.len(),
            dst.len()
        ));
    }
    let id = Isometry::identity();
    if realizes(&id, src, dst) {
        return Ok(Some(id));
    }
    if src
        .iter()
        .zip(dst.iter())
        .any(|(s, d)| s.kind() != d.kind())
    {
        return Ok(None);
    }
    let bs = boundary_data(src);
    let bd = boundary_data(dst);
    if bs.len() != bd.len() {
        return Ok(None);
    }
    if bs.len() >= 3 {
        let s = [bs[0].clone(), bs[1].clone(), bs[2].clone()];
        for a in &bd {
            for b in &bd {
                for c in &bd {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let t = [a.clone(), b.clone(), c.clone()];
                    if let Ok(iso) = triple_normalizer(&s, &t) {
                        if realizes(&iso, src, dst) {
                            return Ok(Some(iso));
                        }
                    }
                }
            }
        }
        return Ok(None);
    }
    if bs.len() == 2 {
        let phi = two_point_normalizer(&bs[0], &bs[1])?;
        for (d0, d1) in [(&bd[0], &bd[1]), (&bd[1], &bd[0])] {
            let psi = two_point_normalizer(d0, d1)?;
            let back = psi.inverse();
            for reversing in [false, true] {
                let mut lambdas: Vec<Rational> = Vec::new();
                for (s, d) in src.iter().zip(dst.iter()) {
                    for l in scale_candidates(&phi.apply_curve(s), &psi.apply_curve(d), reversing) {
                        if !lambdas.contains(&l) {
                            lambdas.push(l);
                        }
                    }
                }
                for l in lambdas {
                    let mut mid = Isometry::dilation(l)?;
                    if reversing {
                        mid = mid.compose(&Isometry::reflection_in_vertical(Rational::zero()));
                    }
                    let iso = back.compose(&mid).compose(&phi);
                    if realizes(&iso, src, dst) {
                        return Ok(Some(iso));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// An isometry inducing the automorphism `perm` of `g`, if one exists.
pub fn isometry_realizing(
    g: &DisjointnessGraph,
    perm: &GraphAutomorphism,
) -> Result<Option<Isometry>> {
    if !g.is_automorphism(&perm.perm) {
        return invalid(format!("{perm} is not an automorphism"));
    }
    let dst: Vec<Curve> = perm.perm.iter().map(|&p| g.curves[p].clone()).collect();
    realizing_isometry(&g.curves, &dst)
}

/// Whether applying `iso` to every curve keeps the adjacency of `g`.
pub fn isometry_preserves_graph(g: &DisjointnessGraph, iso: &Isometry) -> Result<bool> {
    let moved: Vec<Curve> = g.curves.iter().map(|c| iso.apply_curve(c)).collect();
    let h = build_graph_with(&moved, true)?;
    Ok(h.adjacency == g.adjacency)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkCheck {
    pub preserved: bool,
    /// Index pairs `([a, b], [c, d])` whose linking changes.
    pub witness: Option<([usize; 2], [usize; 2])>,
}

/// Whether the map `points[i] ↦ map_values[i]` preserves linkedness of every
/// pair of pairs.
pub fn link_preserving_check(
    points: &[BoundaryPoint],
    map_values: &[BoundaryPoint],
) -> Result<LinkCheck> {
    if points.len() != map_values.len() {
        return invalid(format!(
            "{} points but {} values",
            points.len(),
            map_values.len()
        ));
    }
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return invalid(format!("point {} repeats", points[i]));
            }
            if map_values[i] == map_values[j] {
                return invalid(format!(
                    "the map is not injective at {} and {}",
                    points[i], points[j]
                ));
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for (p, q) in [([a, b], [c, d]), ([a, c], [b, d]), ([a, d], [b, c])] {
                        let before = linked(
                            [&points[p[0]], &points[p[1]]],
                            [&points[q[0]], &points[q[1]]],
                        )?;
                        let after = linked(
                            [&map_values[p[0]], &map_values[p[1]]],
                            [&map_values[q[0]], &map_values[q[1]]],
                        )?;
                        if before != after {
                            return Ok(LinkCheck {
                                preserved: false,
                                witness: Some((p, q)),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(LinkCheck {
        preserved: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::graph::{automorphisms, build_graph};
    use crate::model::curve::{make_geodesic, make_horocycle};
    use crate::model::isometry::{cross_ratio, Orientation};
    use crate::model::number::{q, qi};

    fn b(n: i64) -> BoundaryPoint {
        BoundaryPoint::Finite(qi(n))
    }

    fn four_horocycles() -> Vec<Curve> {
        vec![
            make_horocycle(&b(0), &q(1, 2)).unwrap(),
            make_horocycle(&b(1), &q(1, 2)).unwrap(),
            make_horocycle(&b(2), &q(1, 2)).unwrap(),
            make_horocycle(&BoundaryPoint::Infinity, &qi(2)).unwrap(),
        ]
    }

    #[test]
    fn swap_is_a_reflection() {
        let g = build_graph(&four_horocycles()).unwrap();
        let auts = automorphisms(&g, 10).unwrap();
        let id = isometry_realizing(&g, &auts[0]).unwrap().unwrap();
        assert_eq!(id, Isometry::identity());
        let iso = isometry_realizing(&g, &auts[1]).unwrap().unwrap();
        assert_eq!(iso, Isometry::reflection_in_vertical(qi(1)));
        assert_eq!(iso.orientation(), Orientation::Reversing);
        let (x, y) = iso.apply_exact(&qi(0), &qi(1));
        assert_eq!((x, y), (qi(2), qi(1)));
    }

    #[test]
    fn earthquake_relabeling_has_no_isometry() {
        let src = vec![
            make_geodesic(&b(-1), &b(1)).unwrap(),
            make_geodesic(&b(-3), &b(-2)).unwrap(),
            make_geodesic(&b(2), &b(3)).unwrap(),
        ];
        let dst = vec![
            make_geodesic(&b(-2), &b(1)).unwrap(),
            make_geodesic(&b(-6), &b(-4)).unwrap(),
            make_geodesic(&b(2), &b(3)).unwrap(),
        ];
        assert_eq!(
            build_graph(&src).unwrap().adjacency,
            build_graph(&dst).unwrap().adjacency
        );
        assert_eq!(realizing_isometry(&src, &dst).unwrap(), None);
        let before = cross_ratio([&b(-1), &b(1), &b(-3), &b(2)]).unwrap();
        let after = cross_ratio([&b(-2), &b(1), &b(-6), &b(2)]).unwrap();
        assert_ne!(before, after);
    }

    #[test]
    fn two_point_configurations() {
        let src = vec![
            make_horocycle(&b(0), &qi(1)).unwrap(),
            make_horocycle(&BoundaryPoint::Infinity, &qi(3)).unwrap(),
        ];
        let g = Isometry::from_ints(2, 1, 1, 3, Orientation::Preserving).unwrap();
        let dst: Vec<Curve> = src.iter().map(|c| g.apply_curve(c)).collect();
        let found = realizing_isometry(&src, &dst).unwrap().unwrap();
        assert!(realizes(&found, &src, &dst));
    }

    #[test]
    fn links() {
        let pts: Vec<BoundaryPoint> = (-2..=2).map(b).collect();
        let cubes: Vec<BoundaryPoint> = (-2i64..=2).map(|x| b(x * x * x)).collect();
        assert!(link_preserving_check(&pts, &cubes).unwrap().preserved);
        let pts: Vec<BoundaryPoint> = (0..4).map(b).collect();
        let swapped = vec![b(1), b(0), b(2), b(3)];
        let r = link_preserving_check(&pts, &swapped).unwrap();
        assert!(!r.preserved);
        assert_eq!(r.witness, Some(([0, 2], [1, 3])));
        assert!(link_preserving_check(&pts, &swapped[..3]).is_err());
    }
}
