#![allow(dead_code)]

use cubestar::{
    edge_count, is_balanced_free, CubeSubgraph, CubeVertex, DoubleStarPattern, EdgeIndex,
};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Subgraph with each edge kept independently with probability `keep`.
pub fn random_subgraph(n: usize, keep: f64, rng: &mut ChaCha8Rng) -> CubeSubgraph {
    let mut g = CubeSubgraph::full(n).unwrap();
    for id in 0..edge_count(n).unwrap() {
        if rng.gen::<f64>() >= keep {
            g.delete_edge(EdgeIndex::from_dense_id(n, id).unwrap()).unwrap();
        }
    }
    g
}

/// Random balanced-free subgraph: delete a random edge set and keep the
/// result once the freeness checker accepts it (rejection sampling).
pub fn random_free_subgraph(n: usize, rng: &mut ChaCha8Rng) -> CubeSubgraph {
    let m = edge_count(n).unwrap();
    loop {
        let k = rng.gen_range(0..=m * 2 / 5);
        let mut ids: Vec<usize> = (0..m).collect();
        for i in 0..k {
            let j = rng.gen_range(i..m);
            ids.swap(i, j);
        }
        let mut g = CubeSubgraph::full(n).unwrap();
        for &id in &ids[..k] {
            g.delete_edge(EdgeIndex::from_dense_id(n, id).unwrap()).unwrap();
        }
        if is_balanced_free(&g) {
            return g;
        }
    }
}

/// Literal double-star search, independent of the library detector: try
/// every ordered center pair and every way of assigning disjoint leaf
/// sets out of the two punctured neighborhoods.
pub fn brute_force_contains(g: &CubeSubgraph, p: DoubleStarPattern) -> bool {
    for e in g.iter_edges() {
        let (a, b) = e.endpoints();
        for (u, v) in [(a, b), (b, a)] {
            let at_u: Vec<CubeVertex> =
                g.neighbors_in(u).into_iter().filter(|&w| w != v).collect();
            let at_v: Vec<CubeVertex> =
                g.neighbors_in(v).into_iter().filter(|&w| w != u).collect();
            for leaves_u in at_u.iter().combinations(p.k()) {
                for leaves_v in at_v.iter().combinations(p.l()) {
                    if leaves_u.iter().all(|w| !leaves_v.contains(w)) {
                        return true;
                    }
                }
            }
        }
    }
    false
}
