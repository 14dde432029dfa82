mod common;

use cubestar::{
    contains_double_star, extremal_pair, is_balanced_free, is_balanced_free_general,
    CubeSubgraph, DoubleStarPattern,
};
use rand::Rng;

// The detector's three embedding conditions must coincide with a literal
// search over all leaf assignments, for balanced and lopsided patterns.
#[test]
fn detector_agrees_with_brute_force_on_cube_three() {
    let mut rng = common::rng(21);
    let patterns: Vec<DoubleStarPattern> = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 3)]
        .iter()
        .map(|&(k, l)| DoubleStarPattern::new(k, l).unwrap())
        .collect();
    for _ in 0..10_000 {
        let g = common::random_subgraph(3, rng.gen_range(0.2..1.0), &mut rng);
        for &p in &patterns {
            let found = contains_double_star(&g, p);
            assert_eq!(
                found.is_some(),
                common::brute_force_contains(&g, p),
                "pattern ({}, {})",
                p.k(),
                p.l()
            );
            if let Some(w) = found {
                assert!(w.is_valid_in(&g));
                assert_eq!(w.leaves_u.len(), p.k());
                assert_eq!(w.leaves_v.len(), p.l());
            }
        }
    }
}

#[test]
fn detector_agrees_with_brute_force_on_cube_four() {
    let mut rng = common::rng(22);
    let patterns: Vec<DoubleStarPattern> = [(3, 3), (2, 3), (1, 4)]
        .iter()
        .map(|&(k, l)| DoubleStarPattern::new(k, l).unwrap())
        .collect();
    for _ in 0..10_000 {
        let g = common::random_subgraph(4, rng.gen_range(0.5..1.0), &mut rng);
        for &p in &patterns {
            assert_eq!(
                contains_double_star(&g, p).is_some(),
                common::brute_force_contains(&g, p)
            );
        }
    }
}

#[test]
fn fast_path_agrees_with_general_detector() {
    let mut rng = common::rng(23);
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=5);
        let g = common::random_subgraph(n, rng.gen_range(0.5..1.0), &mut rng);
        assert_eq!(is_balanced_free(&g), is_balanced_free_general(&g), "n = {n}");
    }
}

// Deleting an edge can only destroy embeddings, never create one.
#[test]
fn freeness_is_monotone_under_deletion() {
    let mut rng = common::rng(24);
    for _ in 0..2_000 {
        let n = rng.gen_range(2..=5);
        let g = common::random_subgraph(n, rng.gen_range(0.6..1.0), &mut rng);
        let p = DoubleStarPattern::balanced(n).unwrap();
        if g.edge_count() == 0 {
            continue;
        }
        let edges: Vec<_> = g.iter_edges().collect();
        let victim = edges[rng.gen_range(0..edges.len())];
        let mut smaller = g.clone();
        smaller.delete_edge(victim).unwrap();
        if contains_double_star(&g, p).is_none() {
            assert!(contains_double_star(&smaller, p).is_none());
        }
    }
}

// No random subgraph of a hypercube may ever host a triangle, so two
// adjacent centers never share a neighbor and every witness uses
// k + l + 2 distinct vertices.
#[test]
fn adjacent_vertices_share_no_neighbors() {
    let mut rng = common::rng(25);
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=6);
        let g = common::random_subgraph(n, rng.gen_range(0.3..1.0), &mut rng);
        if g.edge_count() == 0 {
            continue;
        }
        let edges: Vec<_> = g.iter_edges().collect();
        let e = edges[rng.gen_range(0..edges.len())];
        let (a, b) = e.endpoints();
        let at_a = g.neighbors_in(a);
        for w in g.neighbors_in(b) {
            assert!(!at_a.contains(&w) || w == a || w == b);
        }
    }
}

#[test]
fn extremal_graphs_pass_the_brute_force_oracle() {
    for n in 3..=4 {
        let pair = extremal_pair(n).unwrap();
        let p = DoubleStarPattern::balanced(n).unwrap();
        assert!(!common::brute_force_contains(&pair.g, p), "n = {n}");
        assert!(!common::brute_force_contains(&pair.g_prime, p), "n = {n}");
    }
}

#[test]
fn one_extra_edge_on_an_extremal_graph_is_caught_by_everyone() {
    for n in 3..=4 {
        let pair = extremal_pair(n).unwrap();
        let p = DoubleStarPattern::balanced(n).unwrap();
        for e in pair.g.missing_edges() {
            let mut g = pair.g.clone();
            g.add_edge(e).unwrap();
            assert!(!is_balanced_free(&g));
            let w = contains_double_star(&g, p).expect("edge-maximal graph plus an edge");
            assert!(w.is_valid_in(&g));
            assert!(common::brute_force_contains(&g, p));
        }
    }
}

#[test]
fn single_edge_graph_hosts_only_trivial_patterns() {
    let mut g = CubeSubgraph::empty(3).unwrap();
    g.add_edge(cubestar::EdgeIndex::from_dense_id(3, 0).unwrap()).unwrap();
    for (k, l) in [(1, 1), (1, 2), (2, 2)] {
        let p = DoubleStarPattern::new(k, l).unwrap();
        assert!(contains_double_star(&g, p).is_none());
        assert!(!common::brute_force_contains(&g, p));
    }
}
