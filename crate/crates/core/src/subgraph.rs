//! Mutable spanning subgraph of Q_n over its edge slots, with incremental
//! degree bookkeeping.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::hypercube::{check_dimension, edge_count, CubeVertex, EdgeIndex};

/// A spanning subgraph of Q_n stored as a bit vector over all n·2^(n-1)
/// edge slots plus one degree counter per vertex.
///
/// Values are cheap to clone, so search code forks states by cloning;
/// a single value is never mutated from two threads.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeSubgraph {
    n: usize,
    edges: Bits,
    deg: Vec<u8>,
    present: usize,
}

impl CubeSubgraph {
    /// The empty spanning subgraph of Q_n.
    pub fn empty(n: usize) -> Result<Self> {
        check_dimension(n, 1)?;
        Ok(CubeSubgraph {
            n,
            edges: Bits::zeros(edge_count(n)?),
            deg: vec![0; 1 << n],
            present: 0,
        })
    }

    /// Q_n itself: all slots set, every degree n.
    pub fn full(n: usize) -> Result<Self> {
        check_dimension(n, 1)?;
        Ok(CubeSubgraph {
            n,
            edges: Bits::ones(edge_count(n)?),
            deg: vec![n as u8; 1 << n],
            present: edge_count(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.n
    }

    pub fn edge_count(&self) -> usize {
        self.present
    }

    pub fn contains(&self, e: EdgeIndex) -> bool {
        self.edges.get(e.dense_id(self.n))
    }

    pub fn deg(&self, v: CubeVertex) -> usize {
        self.deg[v.mask() as usize] as usize
    }

    /// Inserts an edge. Inserting a present edge is a contract violation
    /// and is reported, never ignored.
    pub fn add_edge(&mut self, e: EdgeIndex) -> Result<()> {
        let id = e.dense_id(self.n);
        if self.edges.get(id) {
            let (a, b) = e.endpoints();
            return Err(Error::EdgeAlreadyPresent { a: a.mask(), b: b.mask() });
        }
        self.edges.set(id);
        self.present += 1;
        let (a, b) = e.endpoints();
        self.deg[a.mask() as usize] += 1;
        self.deg[b.mask() as usize] += 1;
        Ok(())
    }

    /// Removes an edge. Removing an absent edge is a contract violation.
    pub fn delete_edge(&mut self, e: EdgeIndex) -> Result<()> {
        let id = e.dense_id(self.n);
        if !self.edges.get(id) {
            let (a, b) = e.endpoints();
            return Err(Error::EdgeNotPresent { a: a.mask(), b: b.mask() });
        }
        self.edges.clear(id);
        self.present -= 1;
        let (a, b) = e.endpoints();
        self.deg[a.mask() as usize] -= 1;
        self.deg[b.mask() as usize] -= 1;
        Ok(())
    }

    pub fn min_degree(&self) -> usize {
        self.deg.iter().copied().min().unwrap_or(0) as usize
    }

    /// Vertices whose degree equals the ambient degree n.
    pub fn full_degree_set(&self) -> Vec<CubeVertex> {
        let n = self.n as u8;
        self.deg
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == n)
            .map(|(v, _)| CubeVertex(v as u32))
            .collect()
    }

    /// Present edges in ascending dense-id order.
    pub fn iter_edges(&self) -> impl Iterator<Item = EdgeIndex> + '_ {
        let n = self.n;
        self.edges
            .iter_ones()
            .map(move |id| EdgeIndex::from_dense_id(n, id).expect("stored ids are valid"))
    }

    /// The absent edge slots, in ascending dense id order. This is the
    /// deletion form of the subgraph: Q_n minus these edges.
    pub fn missing_edges(&self) -> Vec<EdgeIndex> {
        (0..self.edges.len())
            .filter(|&id| !self.edges.get(id))
            .map(|id| EdgeIndex::from_dense_id(self.n, id).expect("slot ids are valid"))
            .collect()
    }

    /// Neighbors of `v` along present edges, in ascending coordinate order.
    pub fn neighbors_in(&self, v: CubeVertex) -> Vec<CubeVertex> {
        (0..self.n)
            .filter_map(|d| {
                let e = edge_at(self.n, v, d);
                self.contains(e).then(|| CubeVertex(v.mask() ^ (1 << d)))
            })
            .collect()
    }

    /// Number of present edges spanning coordinate `dim`.
    pub fn edges_in_dimension(&self, dim: usize) -> Result<usize> {
        if dim >= self.n {
            return Err(Error::CoordinateOutOfRange { dim, n: self.n });
        }
        let half = 1usize << (self.n - 1);
        Ok((dim * half..(dim + 1) * half).filter(|&id| self.edges_bit(id)).count())
    }

    pub(crate) fn edges_bit(&self, dense_id: usize) -> bool {
        self.edges.get(dense_id)
    }

    /// Degrees recounted from the edge bits alone, for auditing the
    /// incremental counters.
    pub fn recounted_degrees(&self) -> Vec<u8> {
        let mut deg = vec![0u8; 1 << self.n];
        for e in self.iter_edges() {
            let (a, b) = e.endpoints();
            deg[a.mask() as usize] += 1;
            deg[b.mask() as usize] += 1;
        }
        deg
    }

    /// True when the incremental degree view matches a from-scratch recount
    /// and the handshake identity holds.
    pub fn degrees_coherent(&self) -> bool {
        let sum: usize = self.deg.iter().map(|&d| d as usize).sum();
        self.present == self.edges.count_ones()
            && sum == 2 * self.present
            && self.recounted_degrees() == self.deg
    }
}

/// The edge at `v` along coordinate `d`.
pub(crate) fn edge_at(n: usize, v: CubeVertex, d: usize) -> EdgeIndex {
    let base = CubeVertex(v.mask() & !(1 << d));
    EdgeIndex::new(n, d, base).expect("in-range vertex and coordinate")
}

/// The complete matching between two same-dimension copies of Q_n once they
/// are embedded as the halves of Q_{n+1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossEdgeReport {
    pub count: usize,
    /// (vertex in the bit-n=0 half, its mate in the bit-n=1 half), labeled
    /// in Q_{n+1} coordinates.
    pub pairs: Vec<(CubeVertex, CubeVertex)>,
}

/// Reports the cross matching joining `left` and `right` when they are
/// embedded as the two halves of Q_{n+1} with a fresh most-significant
/// coordinate. The matching pairs same-label vertices and is complete, so
/// the count is always 2^n.
pub fn cross_edges(left: &CubeSubgraph, right: &CubeSubgraph) -> Result<CrossEdgeReport> {
    if left.n() != right.n() {
        return Err(Error::DimensionMismatch {
            left: left.n(),
            right: right.n(),
        });
    }
    let n = left.n();
    let pairs: Vec<_> = (0..1u32 << n)
        .map(|v| (CubeVertex(v), CubeVertex(v | 1 << n)))
        .collect();
    Ok(CrossEdgeReport {
        count: pairs.len(),
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(n: usize, a: u32, b: u32) -> EdgeIndex {
        EdgeIndex::from_endpoints(n, CubeVertex(a), CubeVertex(b)).unwrap()
    }

    #[test]
    fn full_examples() {
        let g = CubeSubgraph::full(3).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.deg(CubeVertex(0b000)), 3);
        assert_eq!(CubeSubgraph::full(1).unwrap().edge_count(), 1);
        assert!(CubeSubgraph::full(0).is_err());
        assert!(CubeSubgraph::full(17).is_err());
    }

    #[test]
    fn delete_add_involution() {
        let original = CubeSubgraph::full(3).unwrap();
        let mut g = original.clone();
        let e = edge(3, 0b000, 0b001);
        g.delete_edge(e).unwrap();
        assert_eq!(g.deg(CubeVertex(0b000)), 2);
        assert_eq!(g.deg(CubeVertex(0b001)), 2);
        assert_eq!(g.edge_count(), 11);
        g.add_edge(e).unwrap();
        assert_eq!(g, original);
    }

    #[test]
    fn double_toggle_is_an_error() {
        let mut g = CubeSubgraph::full(3).unwrap();
        let e = edge(3, 0b000, 0b001);
        assert!(matches!(g.add_edge(e), Err(Error::EdgeAlreadyPresent { .. })));
        g.delete_edge(e).unwrap();
        assert!(matches!(g.delete_edge(e), Err(Error::EdgeNotPresent { .. })));
    }

    #[test]
    fn min_degree_and_full_set() {
        let mut g = CubeSubgraph::full(3).unwrap();
        assert_eq!(g.min_degree(), 3);
        assert_eq!(g.full_degree_set().len(), 8);
        g.delete_edge(edge(3, 0b000, 0b001)).unwrap();
        assert_eq!(g.min_degree(), 2);
        assert_eq!(g.full_degree_set().len(), 6);
    }

    #[test]
    fn neighbors_in_reflects_deletions() {
        let mut g = CubeSubgraph::full(3).unwrap();
        g.delete_edge(edge(3, 0b000, 0b010)).unwrap();
        assert_eq!(
            g.neighbors_in(CubeVertex(0b000)),
            vec![CubeVertex(0b001), CubeVertex(0b100)]
        );
    }

    #[test]
    fn cross_edges_trivial_pair() {
        let g = CubeSubgraph::full(1).unwrap();
        let report = cross_edges(&g, &g).unwrap();
        assert_eq!(report.count, 2);
        assert_eq!(report.pairs, vec![
            (CubeVertex(0b00), CubeVertex(0b10)),
            (CubeVertex(0b01), CubeVertex(0b11)),
        ]);
    }

    #[test]
    fn cross_edges_rejects_mixed_dimensions() {
        let a = CubeSubgraph::full(2).unwrap();
        let b = CubeSubgraph::full(3).unwrap();
        assert!(matches!(cross_edges(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn edges_in_dimension_counts_slots() {
        let mut g = CubeSubgraph::full(3).unwrap();
        assert_eq!(g.edges_in_dimension(0).unwrap(), 4);
        g.delete_edge(edge(3, 0b000, 0b001)).unwrap();
        assert_eq!(g.edges_in_dimension(0).unwrap(), 3);
        assert!(g.edges_in_dimension(3).is_err());
    }

    #[test]
    fn handshake_and_coherence_after_edits() {
        let mut g = CubeSubgraph::empty(4).unwrap();
        for id in [0usize, 3, 7, 21, 30] {
            g.add_edge(EdgeIndex::from_dense_id(4, id).unwrap()).unwrap();
            assert!(g.degrees_coherent());
        }
        g.delete_edge(EdgeIndex::from_dense_id(4, 7).unwrap()).unwrap();
        assert!(g.degrees_coherent());
        assert_eq!(g.edge_count(), 4);
    }
}
