//! Raises the minimum degree of a balanced-double-star-free subgraph to
//! n-1 without losing edges, via add-or-swap steps.
//!
//! While some vertex v sits below degree n-1 it is missing at least two of
//! its cube edges; take the lowest-indexed missing edge vp. Since vp is
//! absent, deg(p) <= n-1. If deg(p) <= n-2, or deg(p) = n-1 and no
//! neighbor of p has full degree, vp can be added outright (which also
//! proves the input was not edge-maximal). Otherwise p has a full-degree
//! neighbor s: deleting ps and adding vp keeps the edge count, drops s to
//! n-1, and creates no full-degree vertex, so freeness survives every step.

use crate::error::{Error, Result};
use crate::forbidden::is_balanced_free;
use crate::hypercube::{CubeVertex, EdgeIndex};
use crate::subgraph::{edge_at, CubeSubgraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepairStepKind {
    DirectAdd,
    Swap,
}

/// One normalization step: an edge insertion, paired for a swap with the
/// removal that makes room for it. The removed edge is deleted before the
/// added edge is inserted; its far endpoint had full degree beforehand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RepairStep {
    pub kind: RepairStepKind,
    pub added: EdgeIndex,
    pub removed: Option<EdgeIndex>,
}

/// Log of a normalization run. `edge_delta` counts the direct additions;
/// any direct addition is evidence the input was not edge-maximal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepairReport {
    pub steps: Vec<RepairStep>,
    pub edge_delta: usize,
    pub was_edge_maximal: bool,
}

/// Transforms a free subgraph into a free subgraph with minimum degree at
/// least n-1 and at least as many edges. The input must itself be free and
/// n must be at least 3. Deterministic: the target vertex is the
/// lowest-mask minimum-degree vertex, the missing edge the lowest-indexed
/// one, and the swapped-out neighbor the lowest-mask full-degree one.
pub fn normalize_min_degree(g: &CubeSubgraph) -> Result<(CubeSubgraph, RepairReport)> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Dimension {
            n,
            min: 3,
            max: crate::hypercube::MAX_DIMENSION,
        });
    }
    if !is_balanced_free(g) {
        return Err(Error::NotBalancedFree);
    }

    let mut g = g.clone();
    let mut steps = Vec::new();
    let mut edge_delta = 0usize;
    // The step count never exceeds the total degree deficiency.
    let budget: usize = (0..g.vertex_count())
        .map(|v| (n - 1).saturating_sub(g.deg(CubeVertex(v as u32))))
        .sum();

    while g.min_degree() < n - 1 {
        assert!(steps.len() < budget, "normalization exceeded its termination bound");
        let v = lowest_min_degree_vertex(&g);
        debug_assert!(missing_edges(&g, v).len() >= 2, "deficient vertex misses >= 2 edges");
        let added = missing_edges(&g, v)[0];
        let p = other_endpoint(added, v);

        let swap_out = if g.deg(p) == n - 1 {
            g.neighbors_in(p).into_iter().find(|&s| g.deg(s) == n)
        } else {
            None
        };
        match swap_out {
            Some(s) => {
                let removed = edge_between(&g, p, s);
                g.delete_edge(removed)?;
                g.add_edge(added)?;
                steps.push(RepairStep {
                    kind: RepairStepKind::Swap,
                    added,
                    removed: Some(removed),
                });
            }
            None => {
                g.add_edge(added)?;
                edge_delta += 1;
                steps.push(RepairStep {
                    kind: RepairStepKind::DirectAdd,
                    added,
                    removed: None,
                });
            }
        }
        debug_assert!(is_balanced_free(&g), "freeness must survive every step");
    }

    let report = RepairReport {
        steps,
        edge_delta,
        was_edge_maximal: edge_delta == 0,
    };
    Ok((g, report))
}

fn lowest_min_degree_vertex(g: &CubeSubgraph) -> CubeVertex {
    let min = g.min_degree();
    (0..g.vertex_count() as u32)
        .map(CubeVertex)
        .find(|&v| g.deg(v) == min)
        .expect("nonempty vertex set")
}

// Missing cube edges at v, ascending dense id (= ascending coordinate here).
fn missing_edges(g: &CubeSubgraph, v: CubeVertex) -> Vec<EdgeIndex> {
    (0..g.n())
        .map(|d| edge_at(g.n(), v, d))
        .filter(|&e| !g.contains(e))
        .collect()
}

fn other_endpoint(e: EdgeIndex, v: CubeVertex) -> CubeVertex {
    let (a, b) = e.endpoints();
    if a == v {
        b
    } else {
        a
    }
}

fn edge_between(g: &CubeSubgraph, a: CubeVertex, b: CubeVertex) -> EdgeIndex {
    EdgeIndex::from_endpoints(g.n(), a, b).expect("neighbors are adjacent")
}
