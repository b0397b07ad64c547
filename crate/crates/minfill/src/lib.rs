//! Exact probability measure on the binary-tree topologies that realize
//! finite additive metric spaces.
//!
//! A finite metric space is additive when its distances are the path weights
//! of a nonnegatively weighted tree with the points as leaves; that tree is a
//! minimal filling of the space. This crate enumerates the candidate binary
//! tree topologies, computes the exact Gram determinant that measures each
//! topology's share of weight space, counts tree symmetries, and normalizes
//! the results into a probability distribution over topology classes — all
//! in exact rational arithmetic, with an independent floating-point and
//! Monte-Carlo oracle for cross-validation.

pub mod embedding;
pub mod newick;
pub mod rational;
pub mod topology;

#[cfg(test)]
pub(crate) mod fixtures;

pub use embedding::{
    build_w, distance_matrix, gram_matrix, pair_count, pair_index, pairs, path_counts,
    simplex_vertex_weights, DistanceMatrix, EmbeddingError, GramMatrix, RatMatrix,
    WeightDistribution,
};
pub use newick::{emit_newick, parse_newick, NewickError, NewickErrorKind};
pub use rational::{
    decimal_string, factored_string, format_rat, labeled_topology_count, parse_rat, Rat,
};
pub use topology::{
    enumerate_labeled_topologies, enumerate_topology_classes, for_each_labeled_topology,
    CenterView, Topology, TopologyClass, TopologyError,
};
