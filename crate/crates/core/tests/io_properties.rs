mod common;

use cubestar::{
    edge_count, read_subgraph, write_subgraph, CubeSubgraph, DeletionCertificate, EdgeIndex,
    SubgraphDocument,
};
use proptest::prelude::*;

fn arbitrary_subgraph() -> impl Strategy<Value = CubeSubgraph> {
    (1usize..=6).prop_flat_map(|n| {
        let m = edge_count(n).unwrap();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |drops| {
            let mut g = CubeSubgraph::full(n).unwrap();
            for (id, drop) in drops.into_iter().enumerate() {
                if drop {
                    g.delete_edge(EdgeIndex::from_dense_id(n, id).unwrap()).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn documents_round_trip_through_json(g in arbitrary_subgraph()) {
        let doc = SubgraphDocument::from_subgraph(&g);
        let text = doc.to_json();
        let back = SubgraphDocument::parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_subgraph().unwrap(), g);
    }

    #[test]
    fn serialized_form_is_a_fixed_point(g in arbitrary_subgraph()) {
        // Parsing canonical output and reserializing changes nothing,
        // so byte equality is a fair way to compare documents on disk.
        let text = write_subgraph(&g);
        let again = SubgraphDocument::parse(&text).unwrap().to_json();
        prop_assert_eq!(again, text);
    }

    #[test]
    fn certificates_survive_the_document_encoding(g in arbitrary_subgraph()) {
        let cert = DeletionCertificate::from_subgraph(&g);
        let doc = SubgraphDocument::from_certificate(&cert).unwrap();
        let back = SubgraphDocument::parse(&doc.to_json()).unwrap().to_certificate().unwrap();
        prop_assert_eq!(back, cert);
    }

    #[test]
    fn reversed_pairs_are_rejected(g in arbitrary_subgraph()) {
        let mut doc = SubgraphDocument::from_subgraph(&g);
        if let Some(pair) = doc.deleted_edges.first().copied() {
            doc.deleted_edges[0] = [pair[1], pair[0]];
            prop_assert!(doc.to_subgraph().is_err());
        }
    }

    #[test]
    fn duplicated_pairs_are_rejected(g in arbitrary_subgraph()) {
        let mut doc = SubgraphDocument::from_subgraph(&g);
        if let Some(pair) = doc.deleted_edges.first().copied() {
            doc.deleted_edges.insert(0, pair);
            prop_assert!(doc.to_subgraph().is_err());
        }
    }
}

#[test]
fn a_thousand_random_subgraphs_round_trip_exactly() {
    let mut rng = common::rng(0x10_0913);
    for i in 0..1000usize {
        let n = i % 8 + 1;
        let keep = [0.25, 0.5, 0.8, 0.95][i % 4];
        let g = common::random_subgraph(n, keep, &mut rng);
        let text = write_subgraph(&g);
        let back = read_subgraph(&text).unwrap();
        assert_eq!(back, g, "round trip drifted at iteration {i}");
        assert_eq!(write_subgraph(&back), text);
    }
}

#[test]
fn deletion_order_never_shows_up_in_the_bytes() {
    let n = 4;
    let ids = [3usize, 17, 5, 21, 0, 30];
    let mut forward = CubeSubgraph::full(n).unwrap();
    for &id in &ids {
        forward.delete_edge(EdgeIndex::from_dense_id(n, id).unwrap()).unwrap();
    }
    let mut backward = CubeSubgraph::full(n).unwrap();
    for &id in ids.iter().rev() {
        backward.delete_edge(EdgeIndex::from_dense_id(n, id).unwrap()).unwrap();
    }
    assert_eq!(write_subgraph(&forward), write_subgraph(&backward));
}
