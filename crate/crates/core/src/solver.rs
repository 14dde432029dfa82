//! Independent re-derivation of the extremal edge count: the closed form,
//! an exhaustive search for tiny cubes, and a branch-and-bound over the
//! equivalent minimum edge dominating set problem.
//!
//! The equivalence driving the branch-and-bound: Q_n minus D is free of
//! the balanced double star iff every cube edge shares an endpoint with
//! some edge of D, i.e. D is an edge dominating set (equivalently, the
//! endpoints of D form a vertex cover). A vertex untouched by D keeps
//! full degree, and an edge between two untouched vertices is itself
//! untouched, so it joins two full-degree vertices; conversely a dominated
//! edge has an endpoint of reduced degree.

use itertools::Itertools;

use crate::construct::extremal_pair;
use crate::error::{Error, Result};
use crate::forbidden::{contains_double_star, is_balanced_free_general, DoubleStarPattern};
use crate::hypercube::{check_dimension, edge_count, EdgeIndex};
use crate::subgraph::CubeSubgraph;

/// Largest dimension the closed form evaluates without u64 overflow.
pub const FORMULA_MAX_DIMENSION: usize = 59;

const ENUMERATION_MAX_DIMENSION: usize = 3;
const BNB_MIN_DIMENSION: usize = 3;
const BNB_MAX_DIMENSION: usize = 5;
const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Maximum edge count of a subgraph of Q_n avoiding the balanced double
/// star S_{n-1,n-1}: 0 for n=1, 2 for n=2, 2^(n-3)(4n-3) for n >= 3. The
/// product form and the expanded form n 2^(n-1) - 3 2^(n-3) are computed
/// separately and asserted equal.
pub fn turan_formula(n: usize) -> Result<u64> {
    if n == 0 || n > FORMULA_MAX_DIMENSION {
        return Err(Error::Dimension {
            n,
            min: 1,
            max: FORMULA_MAX_DIMENSION,
        });
    }
    Ok(match n {
        1 => 0,
        2 => 2,
        _ => {
            let product = (1u64 << (n - 3)) * (4 * n as u64 - 3);
            let expanded = n as u64 * (1u64 << (n - 1)) - 3 * (1u64 << (n - 3));
            assert_eq!(product, expanded, "the two closed forms must agree");
            product
        }
    })
}

/// A deleted-edge set for Q_n together with the claims a checker should
/// audit: that the remaining graph avoids the balanced double star, and
/// that the deletion count is the minimum possible for that.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeletionCertificate {
    pub n: usize,
    pub deleted: Vec<EdgeIndex>,
    pub claimed_free: bool,
    pub claimed_optimal: bool,
}

impl DeletionCertificate {
    /// Certificate for a concrete subgraph, with claims computed from the
    /// graph itself: freeness by the general detector, optimality by
    /// comparing the edge count against the closed form. Both claims
    /// always refer to the balanced pattern.
    pub fn from_subgraph(g: &CubeSubgraph) -> Self {
        let claimed_free = is_balanced_free_general(g);
        let claimed_optimal = claimed_free
            && g.edge_count() as u64
                == turan_formula(g.n()).expect("subgraph dimensions fit the formula range");
        DeletionCertificate {
            n: g.n(),
            deleted: g.missing_edges(),
            claimed_free,
            claimed_optimal,
        }
    }

    /// Rebuilds Q_n minus the deleted edges, rejecting edges that do not
    /// fit the stated dimension and duplicate deletions.
    pub fn subgraph(&self) -> Result<CubeSubgraph> {
        let mut g = CubeSubgraph::full(self.n)?;
        for e in &self.deleted {
            let (a, b) = e.endpoints();
            let checked = EdgeIndex::from_endpoints(self.n, a, b)?;
            g.delete_edge(checked)?;
        }
        Ok(g)
    }
}

/// Audits a certificate from scratch: the deleted edges must be distinct
/// and valid for n, the remaining graph must pass the general detector for
/// the balanced pattern, and an optimality claim must match the closed
/// form's deletion count exactly.
pub fn verify_certificate(c: &DeletionCertificate) -> bool {
    let Ok(g) = c.subgraph() else {
        return false;
    };
    if !is_balanced_free_general(&g) {
        return false;
    }
    if c.claimed_optimal {
        let (Ok(total), Ok(extremal)) = (edge_count(c.n), turan_formula(c.n)) else {
            return false;
        };
        if c.deleted.len() as u64 != total as u64 - extremal {
            return false;
        }
    }
    true
}

/// Outcome of a search. `optimum_edges` is the edge count of `witness`;
/// when `proof_complete` is set the search has established that no free
/// subgraph has more edges (equivalently, no smaller deletion set exists).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolveResult {
    pub optimum_edges: usize,
    pub witness: CubeSubgraph,
    pub deletions: DeletionCertificate,
    pub nodes_explored: u64,
    pub proof_complete: bool,
}

/// Exact maximum edge count of a p-free subgraph of Q_n by enumerating
/// deletion sets in increasing size. Freeness is monotone under deletion,
/// so the first feasible size d is optimal and the maximum is
/// edge_count(n) - d. Restricted to n <= 3, where at most 2^12 subsets
/// exist. The certificate's claims refer to the balanced pattern
/// regardless of p.
pub fn exhaustive_turan(n: usize, p: DoubleStarPattern) -> Result<SolveResult> {
    check_dimension(n, 1)?;
    if n > ENUMERATION_MAX_DIMENSION {
        return Err(Error::EnumerationTooLarge {
            n,
            max: ENUMERATION_MAX_DIMENSION,
        });
    }
    let m = edge_count(n)?;
    let mut nodes = 0u64;
    for k in 0..=m {
        for subset in (0..m).combinations(k) {
            nodes += 1;
            let mut g = CubeSubgraph::full(n)?;
            for &id in &subset {
                g.delete_edge(EdgeIndex::from_dense_id(n, id)?)?;
            }
            if contains_double_star(&g, p).is_none() {
                let deletions = DeletionCertificate::from_subgraph(&g);
                return Ok(SolveResult {
                    optimum_edges: m - k,
                    witness: g,
                    deletions,
                    nodes_explored: nodes,
                    proof_complete: true,
                });
            }
        }
    }
    unreachable!("the empty subgraph avoids every double star")
}

/// Minimum edge dominating set of Q_n by branch-and-bound, which by the
/// reduction above equals the minimum deletion set leaving a free graph.
///
/// The search always dominates the lowest-indexed undominated edge next,
/// branching over the 2n-1 edges that can dominate it; a candidate already
/// tried at a node is excluded from its later siblings, so the branches
/// partition the solution space by the first candidate chosen. Every edge
/// dominates at most 2n-1 edges, which gives the pruning bound
/// ceil(undominated / (2n-1)). The incumbent starts from the construction,
/// so the search only has to refute strictly smaller deletion sets. At the
/// root the cube's automorphisms act transitively on edges (any dominating
/// set can be mapped to one containing edge 0), so the root keeps a single
/// representative branch instead of 2n-1.
///
/// `budget` caps the number of nodes visited; on exhaustion the best set
/// found so far is returned with proof_complete = false. The default is
/// unlimited for n <= 4 and 10^9 nodes for n = 5.
pub fn min_edge_dominating(n: usize, budget: Option<u64>) -> Result<SolveResult> {
    if !(BNB_MIN_DIMENSION..=BNB_MAX_DIMENSION).contains(&n) {
        return Err(Error::Dimension {
            n,
            min: BNB_MIN_DIMENSION,
            max: BNB_MAX_DIMENSION,
        });
    }
    let budget = budget.unwrap_or(if n == BNB_MAX_DIMENSION {
        DEFAULT_NODE_BUDGET
    } else {
        u64::MAX
    });

    let m = edge_count(n)?;
    let closed: Vec<Vec<usize>> = (0..m)
        .map(|id| {
            let e = EdgeIndex::from_dense_id(n, id).expect("slot ids are valid");
            let (a, b) = e.endpoints();
            let mut nbhd: Vec<usize> = (0..n)
                .flat_map(|d| {
                    [
                        crate::subgraph::edge_at(n, a, d).dense_id(n),
                        crate::subgraph::edge_at(n, b, d).dense_id(n),
                    ]
                })
                .collect();
            nbhd.sort_unstable();
            nbhd.dedup();
            debug_assert_eq!(nbhd.len(), 2 * n - 1);
            nbhd
        })
        .collect();

    let incumbent: Vec<usize> = extremal_pair(n)?
        .g
        .missing_edges()
        .iter()
        .map(|e| e.dense_id(n))
        .collect();
    debug_assert!(is_edge_dominating(&closed, &incumbent));

    let mut search = Search {
        closed: &closed,
        dominated: vec![0u8; m],
        undominated: m,
        forbidden: vec![false; m],
        chosen: Vec::new(),
        best: incumbent,
        nodes: 0,
        budget,
        exhausted: false,
    };
    // Root symmetry: edge 0 is in some minimum solution, because any
    // chosen edge of any solution can be transported onto edge 0 by a
    // cube automorphism.
    search.select(0);
    search.run();
    search.deselect(0);

    let mut witness = CubeSubgraph::full(n)?;
    for &id in &search.best {
        witness.delete_edge(EdgeIndex::from_dense_id(n, id)?)?;
    }
    let deletions = DeletionCertificate::from_subgraph(&witness);
    Ok(SolveResult {
        optimum_edges: m - search.best.len(),
        witness,
        deletions,
        nodes_explored: search.nodes,
        proof_complete: !search.exhausted,
    })
}

fn is_edge_dominating(closed: &[Vec<usize>], set: &[usize]) -> bool {
    let mut hit = vec![false; closed.len()];
    for &id in set {
        for &d in &closed[id] {
            hit[d] = true;
        }
    }
    hit.iter().all(|&h| h)
}

struct Search<'a> {
    closed: &'a [Vec<usize>],
    dominated: Vec<u8>,
    undominated: usize,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    fn select(&mut self, id: usize) {
        for &d in &self.closed[id] {
            if self.dominated[d] == 0 {
                self.undominated -= 1;
            }
            self.dominated[d] += 1;
        }
        self.chosen.push(id);
    }

    fn deselect(&mut self, id: usize) {
        self.chosen.pop();
        for &d in &self.closed[id] {
            self.dominated[d] -= 1;
            if self.dominated[d] == 0 {
                self.undominated += 1;
            }
        }
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if self.undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let per_edge = self.closed[0].len();
        let needed = (self.undominated + per_edge - 1) / per_edge;
        if self.chosen.len() + needed >= self.best.len() {
            return;
        }
        let target = (0..self.dominated.len())
            .find(|&d| self.dominated[d] == 0)
            .expect("an undominated edge exists");
        let mut tried = Vec::new();
        for i in 0..self.closed[target].len() {
            let c = self.closed[target][i];
            if self.forbidden[c] {
                continue;
            }
            self.select(c);
            self.run();
            self.deselect(c);
            if self.exhausted {
                break;
            }
            self.forbidden[c] = true;
            tried.push(c);
        }
        for c in tried {
            self.forbidden[c] = false;
        }
    }
}
