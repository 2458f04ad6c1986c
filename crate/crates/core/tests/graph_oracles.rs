//! Graph-core operations against independent brute-force oracles.

mod common;

use std::collections::BTreeSet;

use common::{all_classes_up_to, connected_up_to, labelled_graphs};
use d2graph::canon::canonical_form;
use d2graph::search::enumerate_connected_with;
use d2graph::{all_pairs_distances, matrix_power_distances, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn enumeration_matches_labelled_brute_force() {
    for n in 1..=6 {
        let brute: BTreeSet<Vec<u8>> = labelled_graphs(n)
            .filter(Graph::is_connected)
            .map(|g| canonical_form(&g).unwrap())
            .collect();
        let enumerated: Vec<Vec<u8>> =
            enumerate_connected_with(n, 2).unwrap().iter().map(|g| canonical_form(g).unwrap()).collect();
        let as_set: BTreeSet<Vec<u8>> = enumerated.iter().cloned().collect();
        assert_eq!(as_set.len(), enumerated.len(), "duplicates at n={n}");
        assert_eq!(as_set, brute, "n={n}");
    }
}

#[test]
fn larger_class_counts_and_uniqueness() {
    for (n, expected) in [(7, 853), (8, 11117)] {
        let graphs = enumerate_connected_with(n, 2).unwrap();
        assert_eq!(graphs.len(), expected);
        let forms: BTreeSet<Vec<u8>> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), expected);
    }
}

#[test]
fn canonical_form_survives_random_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in all_classes_up_to(7) {
        let form = canonical_form(&g).unwrap();
        let decoded = d2graph::io::graph6::parse(std::str::from_utf8(&form).unwrap()).unwrap();
        assert_eq!(canonical_form(&decoded).unwrap(), form);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        for _ in 0..50 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), form, "{g:?} {perm:?}");
        }
    }
}

#[test]
fn canonical_form_separates_non_isomorphic_labelled_graphs() {
    // labelled brute force on 5 vertices: 34 classes
    let forms: BTreeSet<Vec<u8>> = labelled_graphs(5).map(|g| canonical_form(&g).unwrap()).collect();
    assert_eq!(forms.len(), 34);
}

#[test]
fn distances_agree_with_matrix_powers() {
    for g in all_classes_up_to(7) {
        assert_eq!(all_pairs_distances(&g), matrix_power_distances(&g), "{g:?}");
    }
}

#[test]
fn distance_matrix_axioms() {
    for g in all_classes_up_to(7) {
        let d = all_pairs_distances(&g);
        let n = g.order();
        for u in 0..n {
            assert_eq!(d.get(u, u), Some(0));
            for v in 0..n {
                assert_eq!(d.get(u, v), d.get(v, u));
                assert_eq!(d.get(u, v) == Some(1), g.has_edge(u, v));
                for w in 0..n {
                    if let (Some(a), Some(b), Some(c)) = (d.get(u, v), d.get(v, w), d.get(u, w)) {
                        assert!(c <= a + b);
                    }
                }
            }
        }
    }
}

#[test]
fn complement_is_an_involution() {
    for g in all_classes_up_to(8) {
        assert_eq!(g.complement().complement(), g);
    }
}

fn join_by_bipartitions(g: &Graph) -> bool {
    let n = g.order();
    // S contains vertex 0, complement side non-empty
    (0u64..1 << (n - 1)).any(|rest| {
        let s = 1 | rest << 1;
        let t = !s & ((1u64 << n) - 1);
        t != 0
            && (0..n)
                .filter(|&u| s >> u & 1 == 1)
                .all(|u| (0..n).filter(|&v| t >> v & 1 == 1).all(|v| g.has_edge(u, v)))
    })
}

#[test]
fn join_detection_matches_bipartition_search() {
    for g in all_classes_up_to(7).into_iter().filter(|g| g.order() >= 2) {
        let join = g.has_spanning_complete_bipartite().unwrap();
        assert_eq!(join, !g.complement().is_connected());
        assert_eq!(join, join_by_bipartitions(&g), "{g:?}");
    }
}

#[test]
fn connected_stream_is_connected() {
    assert!(connected_up_to(7).iter().all(Graph::is_connected));
}
