//! Detection of double stars S_{k,l} in subgraphs of Q_n.
//!
//! The general detector uses the exact embedding criterion for an edge uv:
//! |N(u)\{v}| >= k, |N(v)\{u}| >= l, and |(N(u) ∪ N(v)) \ {u,v}| >= k+l.
//! The three conditions are sufficient for any host (a counting argument
//! splits common neighbors between the two centers) and necessary
//! trivially. Subgraphs of Q_n are triangle-free, so adjacent vertices
//! share no neighbors and the union condition is implied by the first two;
//! the balanced case then collapses to a pure degree test.

use crate::error::{Error, Result};
use crate::hypercube::{CubeVertex, EdgeIndex};
use crate::subgraph::CubeSubgraph;

/// Parameters (k, l) of the double star S_{k,l}: an edge uv plus k extra
/// leaves at u and l extra leaves at v, all distinct.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DoubleStarPattern {
    k: usize,
    l: usize,
}

impl DoubleStarPattern {
    pub fn new(k: usize, l: usize) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidPattern { k, l });
        }
        Ok(DoubleStarPattern { k, l })
    }

    /// The balanced pattern S_{n-1,n-1} forbidden in Q_n; needs n >= 2.
    pub fn balanced(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPattern { k: 0, l: 0 });
        }
        Self::new(n - 1, n - 1)
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn l(self) -> usize {
        self.l
    }

    pub fn is_balanced(self) -> bool {
        self.k == self.l
    }
}

/// A concrete embedding of a double star in a host subgraph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingWitness {
    pub center_u: CubeVertex,
    pub center_v: CubeVertex,
    pub leaves_u: Vec<CubeVertex>,
    pub leaves_v: Vec<CubeVertex>,
}

impl EmbeddingWitness {
    /// Checks the witness against a host: the center edge and every
    /// center-leaf edge are present, and all vertices are pairwise distinct.
    pub fn is_valid_in(&self, g: &CubeSubgraph) -> bool {
        let n = g.n();
        let edge_present = |a: CubeVertex, b: CubeVertex| {
            EdgeIndex::from_endpoints(n, a, b).map(|e| g.contains(e)).unwrap_or(false)
        };
        if !edge_present(self.center_u, self.center_v) {
            return false;
        }
        if self.leaves_u.iter().any(|&w| !edge_present(self.center_u, w))
            || self.leaves_v.iter().any(|&w| !edge_present(self.center_v, w))
        {
            return false;
        }
        let mut all = vec![self.center_u, self.center_v];
        all.extend_from_slice(&self.leaves_u);
        all.extend_from_slice(&self.leaves_v);
        let len = all.len();
        all.sort_unstable();
        all.dedup();
        all.len() == len
    }
}

/// Searches `g` for an embedding of S_{k,l}. Edges are scanned in ascending
/// dense-id order and leaves are chosen in ascending mask order, exclusive
/// neighbors before shared ones, so the witness is deterministic.
pub fn contains_double_star(g: &CubeSubgraph, p: DoubleStarPattern) -> Option<EmbeddingWitness> {
    for e in g.iter_edges() {
        let (a, b) = e.endpoints();
        if let Some(w) = try_embed(g, a, b, p.k, p.l) {
            return Some(w);
        }
        if !p.is_balanced() {
            if let Some(w) = try_embed(g, b, a, p.k, p.l) {
                return Some(w);
            }
        }
    }
    None
}

fn try_embed(
    g: &CubeSubgraph,
    u: CubeVertex,
    v: CubeVertex,
    k: usize,
    l: usize,
) -> Option<EmbeddingWitness> {
    // Degree conditions first; they are cheap and almost always fail.
    if g.deg(u) < k + 1 || g.deg(v) < l + 1 {
        return None;
    }
    let mut at_u: Vec<CubeVertex> = g.neighbors_in(u).into_iter().filter(|&w| w != v).collect();
    let mut at_v: Vec<CubeVertex> = g.neighbors_in(v).into_iter().filter(|&w| w != u).collect();
    at_u.sort_unstable();
    at_v.sort_unstable();
    let shared: Vec<CubeVertex> = at_u.iter().copied().filter(|w| at_v.contains(w)).collect();
    if at_u.len() + at_v.len() - shared.len() < k + l {
        return None;
    }

    let mut leaves_u: Vec<CubeVertex> =
        at_u.iter().copied().filter(|w| !shared.contains(w)).take(k).collect();
    let mut leaves_v: Vec<CubeVertex> =
        at_v.iter().copied().filter(|w| !shared.contains(w)).take(l).collect();
    let mut pool = shared.into_iter();
    while leaves_u.len() < k {
        leaves_u.push(pool.next().expect("union bound guarantees enough leaves"));
    }
    while leaves_v.len() < l {
        leaves_v.push(pool.next().expect("union bound guarantees enough leaves"));
    }
    Some(EmbeddingWitness {
        center_u: u,
        center_v: v,
        leaves_u,
        leaves_v,
    })
}

/// Fast freeness test for the balanced pattern S_{n-1,n-1}: a subgraph of
/// Q_n contains it exactly when some present edge joins two vertices of
/// full degree n.
pub fn is_balanced_free(g: &CubeSubgraph) -> bool {
    let n = g.n();
    for e in g.iter_edges() {
        let (a, b) = e.endpoints();
        if g.deg(a) == n && g.deg(b) == n {
            return false;
        }
    }
    true
}

/// Balanced freeness through the general detector. Q_1 is the one dimension
/// whose balanced pattern S_{0,0} is a bare edge, below the detector's
/// parameter range, so it is answered by the edge count directly.
pub fn is_balanced_free_general(g: &CubeSubgraph) -> bool {
    if g.n() < 2 {
        return g.edge_count() == 0;
    }
    let p = DoubleStarPattern::balanced(g.n()).expect("n >= 2");
    contains_double_star(g, p).is_none()
}
