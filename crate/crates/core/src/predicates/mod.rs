//! Exact combinatorial predicates on pairs and triples of curves.

pub mod order;
pub mod pattern;
pub mod tangent;

pub use order::{horocycle_leq, linked, same_endpoints, HoroOrder};
pub use pattern::{
    hypercycle_pair_type, intersection_pattern, pair_type_of, HypercyclePairType,
    IntersectionPattern, PatternRecord, QuadPoint,
};
pub use tangent::between_tangent;
