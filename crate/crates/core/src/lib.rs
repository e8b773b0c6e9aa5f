//! Exact census of bipartite graphs with distinguished sides, up to
//! isomorphism.
//!
//! A graph with `m` row vertices, `n` column vertices and `k` edges is
//! handled through its `m × n` biadjacency [`BinaryMatrix`]; isomorphism is
//! the action of row and column permutations. The crate enumerates the
//! isomorphism classes for given `(m, n, k)`, computes for each class its
//! canonical form, orbit size, stabilizer order and neighborhood
//! equivalence classes, and evaluates the class sums
//! `Σ 1/∏δ!` and `m!·n!·Σ 1/|Stab|` against `C(mn, k)` in exact rationals.
//!
//! All indices are 0-based.

pub mod canonical;
pub mod census;
pub mod combinations;
pub mod counting;
pub mod document;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod neighborhood;
pub mod permutation;
pub mod rational;

pub use canonical::{canonical_form, orbit_data, orbit_size, stabilizer_order, OrbitData};
pub use census::{
    binomial_count, enumerate_census, paper_lhs, paper_rhs, sweep, verify_identity, Census,
    CensusOptions, IsoClassRecord, SweepSummary, VerifyReport,
};
pub use error::{Error, Result};
pub use graph::{graph_of_matrix, matrix_of_graph, BipartiteGraph, Side, Vertex};
pub use matrix::BinaryMatrix;
pub use neighborhood::{classify, degree, degree_sum_check, neighbors, NeighborhoodClassification};
pub use permutation::Permutation;
pub use rational::ExactRational;
