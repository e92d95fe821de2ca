mod common;

use packlab::graph::{enumerate_graphs, DegreeSequence};
use packlab::recognize::*;
use packlab::Graph;
use proptest::prelude::*;

#[test]
fn split_recognition_matches_partition_search() {
    for n in 0..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let w = is_split(&g);
            assert_eq!(w.is_some(), common::is_split(&g), "{g}");
            if let Some(w) = &w {
                assert!(w.is_valid_for(&g));
            }
            if n <= 6 {
                assert_eq!(w.is_some(), is_split(&g.complement()).is_some(), "{g}");
            }
        }
    }
}

#[test]
fn realizations_of_split_graphs_are_split() {
    for n in 1..=6 {
        let split_sequences: std::collections::HashSet<_> =
            enumerate_graphs(n).unwrap().into_iter().filter(|g| is_split(g).is_some()).map(|g| DegreeSequence::of(&g)).collect();
        for h in common::labeled_graphs(n) {
            if split_sequences.contains(&DegreeSequence::of(&h)) {
                assert!(is_split(&h).is_some(), "{h}");
            }
        }
    }
}

#[test]
fn unigraph_matches_definition_through_order_six() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(is_unigraph(&g).unwrap(), common::is_unigraph(&g), "{g}");
        }
    }
}

#[test]
fn dominating_clique_matches_definition() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let w = has_dominating_clique(&g);
            assert_eq!(w.is_some(), common::has_dominating_clique(&g), "{g}");
        }
    }
}

#[test]
fn builder_shapes() {
    let k33 = build_complete_bipartite(3, 3);
    assert_eq!((k33.order(), k33.edge_count()), (6, 9));
    assert!(k33.is_regular() && k33.degree(0) == 3);
    assert!(common::isomorphic(&build_u3(0), &build_cycle_edges(4).unwrap()));
    let u = build_u2(2, 3).unwrap();
    assert_eq!(DegreeSequence::of(&u).terms(), [3, 1, 1, 1, 1, 1, 1, 1]);
    let c5 = build_cycle_edges(5).unwrap();
    assert_eq!(common::sorted_degrees(&c5), vec![2; 5]);
    assert!(c5.is_connected());
}

#[test]
fn exception_families_at_small_parameters() {
    let two_k3 = build_disjoint_copies(2, &build_complete(3));
    let f1 = match_exceptions(&build_cycle_edges(5).unwrap().with_isolates(1), &two_k3).unwrap();
    assert_eq!(f1, vec![ExceptionKind::F1]);
    let f2 = match_exceptions(&build_complete(3).with_isolates(3), &two_k3).unwrap();
    assert!(f2.iter().any(|k| matches!(k, ExceptionKind::F2 { delta1: 2, delta2: 2 })), "{f2:?}");
    let three_k2 = build_disjoint_copies(3, &build_complete(2));
    assert_eq!(match_exceptions(&three_k2, &build_complete_bipartite(3, 3)).unwrap(), vec![ExceptionKind::F3 { delta2: 3 }]);
    let k4k2 = build_complete(4).disjoint_union(&build_complete(2));
    assert_eq!(match_exceptions(&three_k2, &k4k2).unwrap(), vec![ExceptionKind::F4 { delta2: 3 }]);
    let two_k2 = build_disjoint_copies(2, &build_complete(2));
    assert!(match_exceptions(&two_k2, &build_complete_bipartite(2, 2)).unwrap().is_empty());
}

fn arb_pair() -> impl Strategy<Value = (Graph, Graph, Vec<usize>, Vec<usize>)> {
    (1usize..=8).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (
            proptest::collection::vec(any::<bool>(), m),
            proptest::collection::vec(any::<bool>(), m),
            perm.clone(),
            perm,
        )
            .prop_map(move |(a, b, p, q)| {
                let build = |bits: &[bool]| {
                    let mut g = Graph::new(n);
                    for (i, (u, v)) in common::pairs(n).into_iter().enumerate() {
                        if bits[i] {
                            g.add_edge(u, v);
                        }
                    }
                    g
                };
                (build(&a), build(&b), p, q)
            })
    })
}

fn exceptional_pairs() -> Vec<(Graph, Graph)> {
    let two_k3 = build_disjoint_copies(2, &build_complete(3));
    let three_k2 = build_disjoint_copies(3, &build_complete(2));
    vec![
        (build_cycle_edges(5).unwrap().with_isolates(1), two_k3.clone()),
        (build_complete(3).with_isolates(3), two_k3),
        (three_k2.clone(), build_complete_bipartite(3, 3)),
        (three_k2, build_complete(4).disjoint_union(&build_complete(2))),
    ]
}

proptest! {
    #[test]
    fn exception_matches_ignore_labels((g1, g2, p, q) in arb_pair()) {
        let base = match_exceptions(&g1, &g2).unwrap();
        prop_assert_eq!(match_exceptions(&g1.relabel(&p), &g2.relabel(&q)).unwrap(), base);
    }

    #[test]
    fn relabeled_exceptions_still_match(i in 0usize..4, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let (g1, g2) = exceptional_pairs().swap_remove(i);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut p: Vec<usize> = (0..6).collect();
        let mut q = p.clone();
        p.shuffle(&mut rng);
        q.shuffle(&mut rng);
        let base = match_exceptions(&g1, &g2).unwrap();
        prop_assert!(!base.is_empty());
        prop_assert_eq!(match_exceptions(&g1.relabel(&p), &g2.relabel(&q)).unwrap(), base);
    }
}
