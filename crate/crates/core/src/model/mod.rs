//! Value types of the half-plane model and their exact constructors.

pub mod boundary;
pub mod circle;
pub mod curve;
pub mod distance;
pub mod isometry;
pub mod number;
pub mod point;

pub use boundary::BoundaryPoint;
pub use circle::{ApproxCircle, GeneralizedCircle};
pub use curve::{
    classify_circle, classify_curve, make_geodesic, make_horocycle, make_hypercycle,
    Classification, Curve, CurveKind, CurveRecord,
};
pub use distance::{distance_to_geodesic, equidistant_pair, equidistant_pair_exact, Crescent};
pub use isometry::{triple_normalizer, two_point_normalizer, Isometry, IsometryF64, Orientation};
pub use number::{q, qi, Quad, Rational};
pub use point::UhpPoint;
