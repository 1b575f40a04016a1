//! The isometry returning a tangent pair of horocycles to `h(0, 1/2)` and
//! `h(∞, 1)`.

use crate::error::{invalid, Result};
use crate::model::boundary::BoundaryPoint;
use crate::model::curve::{Curve, CurveKind};
use crate::model::isometry::{two_point_normalizer, Isometry};
use crate::predicates::pattern::intersection_pattern;

/// `j = φ₂ ∘ φ₁`: `φ₁` sends the centers to `0` and `∞`, `φ₂` rescales the
/// contact point to `i`.
pub fn normalizer_from_images(img_h0: &Curve, img_hinf: &Curve) -> Result<Isometry> {
    for h in [img_h0, img_hinf] {
        if h.kind() != CurveKind::Horocycle {
            return invalid(format!("expected a horocycle, got {h}"));
        }
    }
    if !intersection_pattern(img_h0, img_hinf).tangent {
        return invalid(format!("{img_h0} and {img_hinf} are not tangent"));
    }
    let (c0, cinf) = (img_h0.center().unwrap(), img_hinf.center().unwrap());
    let phi1 = two_point_normalizer(cinf, c0)?;
    let line = phi1.apply_curve(img_hinf);
    debug_assert_eq!(line.center(), Some(&BoundaryPoint::Infinity));
    let height = line.size().unwrap().clone();
    let phi2 = Isometry::dilation(height.recip())?;
    Ok(phi2.compose(&phi1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::curve::make_horocycle;
    use crate::model::number::{q, qi};

    fn canonical() -> (Curve, Curve) {
        (
            make_horocycle(&BoundaryPoint::Finite(qi(0)), &q(1, 2)).unwrap(),
            make_horocycle(&BoundaryPoint::Infinity, &qi(1)).unwrap(),
        )
    }

    #[test]
    fn already_normalized() {
        let (a, b) = canonical();
        assert_eq!(
            normalizer_from_images(&a, &b).unwrap(),
            Isometry::identity()
        );
    }

    #[test]
    fn translated_and_scaled_pair() {
        let a = make_horocycle(&BoundaryPoint::Finite(qi(3)), &qi(1)).unwrap();
        let b = make_horocycle(&BoundaryPoint::Infinity, &qi(2)).unwrap();
        let j = normalizer_from_images(&a, &b).unwrap();
        assert_eq!(
            j.apply_boundary(&BoundaryPoint::Finite(qi(3))),
            BoundaryPoint::Finite(qi(0))
        );
        assert_eq!(
            j.apply_boundary(&BoundaryPoint::Infinity),
            BoundaryPoint::Infinity
        );
        assert_eq!(j.apply_exact(&qi(3), &qi(2)), (qi(0), qi(1)));
        assert_eq!((j.apply_curve(&a), j.apply_curve(&b)), canonical());
    }

    #[test]
    fn finite_tangent_pair() {
        let a = make_horocycle(&BoundaryPoint::Finite(qi(0)), &q(1, 2)).unwrap();
        let b = make_horocycle(&BoundaryPoint::Finite(qi(1)), &q(1, 2)).unwrap();
        let j = normalizer_from_images(&a, &b).unwrap();
        assert_eq!((j.apply_curve(&a), j.apply_curve(&b)), canonical());
        assert_eq!(j.apply_exact(&q(1, 2), &q(1, 2)), (qi(0), qi(1)));
        let far = make_horocycle(&BoundaryPoint::Finite(qi(5)), &q(1, 2)).unwrap();
        assert!(normalizer_from_images(&a, &far).is_err());
    }
}
