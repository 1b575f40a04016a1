//! Simple earthquakes and the obstruction to carrying horocycles along them.

pub mod map;
pub mod realize;

pub use map::{
    cocircular, eq_apply, eq_apply_boundary, eq_geodesic_image, exact_samples,
    image_is_curve_under, pointwise_image_is_curve, CocircularityReport, EarthquakeMap, Side,
};
pub use realize::{
    pair_pattern, tangency_realizability, Certificate, PairPattern, Realizability,
    RealizabilityInstance,
};
