//! Extremal subgraphs of the hypercube avoiding balanced double stars.
//!
//! The double star S_{k,l} is an edge plus k extra leaves at one end and
//! l at the other. For the balanced pattern S_{n-1,n-1} inside Q_n the
//! maximum edge count of an avoiding subgraph is 0 for n=1, 2 for n=2 and
//! 2^(n-3)(4n-3) for n >= 3. This crate builds graphs attaining the bound
//! for every dimension up to 16, detects double-star embeddings, repairs
//! low-degree vertices without losing freeness, and re-derives the bound
//! independently by exhaustive search (n <= 3) and by branch-and-bound
//! over the equivalent minimum edge dominating set problem (n <= 5), with
//! machine-checkable deletion certificates throughout.
//!
//! Vertices are bitmasks, edges are (coordinate, lower endpoint) pairs
//! with a dense contiguous numbering, and subgraphs are bit vectors over
//! the edge slots, so everything here is plain integer combinatorics.

mod bits;

pub mod construct;
pub mod error;
pub mod forbidden;
pub mod hypercube;
pub mod io;
pub mod repair;
pub mod solver;
pub mod subgraph;

pub use construct::{base_pair_3, extremal_pair, ExtremalPair};
pub use error::{Error, Result};
pub use forbidden::{
    contains_double_star, is_balanced_free, is_balanced_free_general, DoubleStarPattern,
    EmbeddingWitness,
};
pub use hypercube::{
    apply_automorphism, edge_count, layer, layer_size, neighbors, CubeAutomorphism, CubeVertex,
    EdgeIndex, MAX_DIMENSION,
};
pub use io::{
    export_dimacs, read_subgraph, write_subgraph, SubgraphDocument, CLAIMED_FREE_KEY,
    CLAIMED_OPTIMAL_KEY, SCHEMA_VERSION,
};
pub use repair::{normalize_min_degree, RepairReport, RepairStep, RepairStepKind};
pub use solver::{
    exhaustive_turan, min_edge_dominating, turan_formula, verify_certificate,
    DeletionCertificate, SolveResult, FORMULA_MAX_DIMENSION,
};
pub use subgraph::{cross_edges, CrossEdgeReport, CubeSubgraph};
