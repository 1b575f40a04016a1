//! Betweenness for three curves tangent at a common interior point.

use crate::error::{invalid, Result};
use crate::model::curve::Curve;
use crate::model::number::{qi, Rational};
use crate::predicates::pattern::intersection_pattern;

/// Gradient of `a(x² + y²) + bx + cy + d` at `(x, y)`.
pub(crate) fn gradient(c: &Curve, x: &Rational, y: &Rational) -> (Rational, Rational) {
    let [a, b, cc, _] = c.circle().coeffs();
    (qi(2) * &a * x + b, qi(2) * &a * y + cc)
}

/// Index (0, 1 or 2) of the curve separating the other two near their common
/// tangency point.
///
/// All three curves share a tangent line at the point, so near it they are
/// ordered like their signed curvatures; the middle curvature wins.
pub fn between_tangent(h1: &Curve, h2: &Curve, h3: &Curve) -> Result<usize> {
    let hs = [h1, h2, h3];
    let mut point: Option<(Rational, Rational)> = None;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if hs[i] == hs[j] {
            return invalid(format!("curve {} is repeated", hs[i]));
        }
        let p = intersection_pattern(hs[i], hs[j]);
        let t = match p.tangency_point() {
            Some(t) => t,
            None => return invalid(format!("{} and {} are not tangent", hs[i], hs[j])),
        };
        match &point {
            None => point = Some(t),
            Some(q) if *q == t => {}
            Some(_) => return invalid("the three tangency points differ"),
        }
    }
    let (x, y) = point.unwrap();
    let n = gradient(h1, &x, &y);
    let nn = &n.0 * &n.0 + &n.1 * &n.1;
    // κ_i ∝ a_i / λ_i with ∇F_i = λ_i n
    let kappa: Vec<Rational> = hs
        .iter()
        .map(|h| {
            let g = gradient(h, &x, &y);
            let lambda = (&g.0 * &n.0 + &g.1 * &n.1) / &nn;
            h.circle().a() / lambda
        })
        .collect();
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| kappa[i].cmp(&kappa[j]));
    Ok(idx[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::boundary::BoundaryPoint;
    use crate::model::curve::make_horocycle;
    use crate::model::number::q;

    fn triple() -> [Curve; 3] {
        [
            make_horocycle(&BoundaryPoint::Finite(qi(0)), &q(1, 2)).unwrap(),
            Curve::from_coeffs(qi(1), qi(0), q(-3, 4), q(-1, 4)).unwrap(),
            make_horocycle(&BoundaryPoint::Infinity, &qi(1)).unwrap(),
        ]
    }

    // walk a small circle around (px, py) and read the order of crossings
    fn sampled_middle(hs: &[Curve; 3], px: f64, py: f64) -> usize {
        let circles: Vec<_> = hs.iter().map(|h| h.circle().to_approx()).collect();
        let n = 20_000;
        let r = 0.01;
        let at = |k: usize| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            (px + r * t.cos(), py + r * t.sin())
        };
        let mut labels = Vec::new();
        for k in 0..n {
            let (p0, p1) = (at(k), at(k + 1));
            for (i, c) in circles.iter().enumerate() {
                if c.eval(p0.0, p0.1).signum() != c.eval(p1.0, p1.1).signum() {
                    labels.push(i);
                }
            }
        }
        assert_eq!(labels.len(), 6);
        // the middle curve is the one whose two crossings are not adjacent
        (0..3)
            .find(|&i| {
                let pos: Vec<usize> = (0..6).filter(|&k| labels[k] == i).collect();
                let gap = pos[1] - pos[0];
                gap != 1 && gap != 5
            })
            .unwrap()
    }

    #[test]
    fn hypercycle_is_between_the_horocycles() {
        let [a, b, c] = triple();
        assert_eq!(between_tangent(&a, &b, &c).unwrap(), 1);
        assert_eq!(sampled_middle(&triple(), 0.0, 1.0), 1);
        assert_eq!(between_tangent(&c, &a, &b).unwrap(), 2);
        assert_eq!(between_tangent(&b, &c, &a).unwrap(), 0);
    }

    #[test]
    fn rejects_repeats_and_non_tangent_triples() {
        let [a, b, _] = triple();
        assert!(between_tangent(&a, &a.clone(), &b).is_err());
        let far = make_horocycle(&BoundaryPoint::Finite(qi(5)), &qi(1)).unwrap();
        assert!(between_tangent(&a, &b, &far).is_err());
    }
}
