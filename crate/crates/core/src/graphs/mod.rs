//! Finite pieces of the disjointness graphs of geodesics, horocycles and
//! hypercycles.

pub mod graph;
pub mod realize;

pub use graph::{
    automorphisms, build_graph, build_graph_with, DisjointnessGraph, GraphAutomorphism, GraphClass,
    GraphRecord, MAX_AUTOMORPHISM_VERTICES,
};
pub use realize::{
    isometry_preserves_graph, isometry_realizing, link_preserving_check, realizing_isometry,
    LinkCheck,
};
