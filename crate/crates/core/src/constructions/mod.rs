//! Gadgets assembled from the model and predicates: chains, witnesses,
//! pinching horocycles, families, configurations and normalizers.

pub mod config;
pub mod dyadic;
pub mod family;
pub mod normalize;
pub mod pinch;
pub mod sigma;
pub mod witness;

pub use config::{four_geodesic_config, ConfigReport, FourGeodesicConfig};
pub use dyadic::{dyadic, dyadic_family, DyadicFamily};
pub use family::*;
pub use normalize::normalizer_from_images;
pub use pinch::{pinch_pair, PinchHorocycle};
pub use sigma::{sigma_center_swap, CenterSwap};
pub use witness::{hyp1_witness, witness_search, Witness};
