//! Builds extremal balanced-double-star-free subgraphs of the hypercube.
//!
//! The construction keeps a pair of graphs whose full-degree vertex sets
//! are disjoint. Stacking one on the 0-half and the other on the 1-half of
//! the next cube and joining the halves by all cross edges raises every
//! degree by one, so the full-degree vertices of the stack are exactly the
//! full-degree vertices of the halves, and no cross edge can join two of
//! them. Swapping the halves yields the partner graph, whose full-degree
//! set is the first one's shifted across the new coordinate.

use crate::error::Result;
use crate::forbidden::is_balanced_free;
use crate::hypercube::{check_dimension, CubeVertex, EdgeIndex};
use crate::subgraph::CubeSubgraph;

/// Two edge-maximal free subgraphs of the same cube with disjoint
/// full-degree vertex sets. The disjointness is what lets the pair be
/// stacked into the next dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtremalPair {
    pub g: CubeSubgraph,
    pub g_prime: CubeSubgraph,
}

impl ExtremalPair {
    pub fn n(&self) -> usize {
        self.g.n()
    }
}

/// The dimension-3 seed: Q_3 minus a perfect matching on six vertices,
/// leaving full-degree sets {000, 111} and {001, 110} respectively.
pub fn base_pair_3() -> ExtremalPair {
    let g = delete_all(&[(1, 3), (2, 6), (4, 5)]);
    let g_prime = delete_all(&[(0, 2), (4, 5), (3, 7)]);
    let pair = ExtremalPair { g, g_prime };
    debug_assert!(pair_is_coherent(&pair));
    pair
}

fn delete_all(pairs: &[(u32, u32)]) -> CubeSubgraph {
    let mut g = CubeSubgraph::full(3).expect("dimension 3 is in range");
    for &(a, b) in pairs {
        let e = EdgeIndex::from_endpoints(3, CubeVertex(a), CubeVertex(b))
            .expect("seed deletions are cube edges");
        g.delete_edge(e).expect("seed deletions are distinct");
    }
    g
}

/// Builds the extremal pair in dimension n by repeated stacking from the
/// dimension-3 seed. Each graph has 2^(n-3) * (4n - 3) edges.
pub fn extremal_pair(n: usize) -> Result<ExtremalPair> {
    check_dimension(n, 3)?;
    let mut pair = base_pair_3();
    while pair.n() < n {
        pair = extend(&pair);
    }
    Ok(pair)
}

fn extend(pair: &ExtremalPair) -> ExtremalPair {
    let out = ExtremalPair {
        g: stack(&pair.g, &pair.g_prime),
        g_prime: stack(&pair.g_prime, &pair.g),
    };
    debug_assert!(pair_is_coherent(&out));
    out
}

// Places `low` on the 0-half and `high` on the 1-half of the next cube and
// joins every vertex to its mirror image.
fn stack(low: &CubeSubgraph, high: &CubeSubgraph) -> CubeSubgraph {
    let m = low.n();
    let lift = 1u32 << m;
    let mut out = CubeSubgraph::empty(m + 1).expect("stacked dimension is in range");
    for e in low.iter_edges() {
        let (a, b) = e.endpoints();
        let lifted = EdgeIndex::from_endpoints(m + 1, a, b).expect("half edges stay edges");
        out.add_edge(lifted).expect("half edges are fresh");
    }
    for e in high.iter_edges() {
        let (a, b) = e.endpoints();
        let lifted = EdgeIndex::from_endpoints(m + 1, CubeVertex(a.0 | lift), CubeVertex(b.0 | lift))
            .expect("half edges stay edges");
        out.add_edge(lifted).expect("half edges are fresh");
    }
    for v in 0..lift {
        let cross = EdgeIndex::new(m + 1, m, CubeVertex(v)).expect("cross edges are cube edges");
        out.add_edge(cross).expect("cross edges are fresh");
    }
    out
}

fn pair_is_coherent(pair: &ExtremalPair) -> bool {
    let full = pair.g.full_degree_set();
    let full_prime = pair.g_prime.full_degree_set();
    pair.g.n() == pair.g_prime.n()
        && pair.g.edge_count() == pair.g_prime.edge_count()
        && is_balanced_free(&pair.g)
        && is_balanced_free(&pair.g_prime)
        && full.iter().all(|v| !full_prime.contains(v))
}
