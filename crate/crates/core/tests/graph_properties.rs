mod common;

use packlab::graph::*;
use packlab::Graph;
use proptest::prelude::*;
use std::collections::HashSet;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let mut g = Graph::new(n);
            for (i, (u, v)) in common::pairs(n).into_iter().enumerate() {
                if bits[i] {
                    g.add_edge(u, v);
                }
            }
            g
        })
    })
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn edge_exchange_keeps_every_degree(g in arb_graph(10), picks in proptest::collection::vec(any::<prop::sample::Index>(), 4)) {
        let n = g.order();
        let q: Vec<usize> = picks.iter().map(|i| i.index(n)).collect();
        let spec = EdgeExchangeSpec::new(q[0], q[1], q[2], q[3]);
        match edge_exchange(&g, spec) {
            Ok(h) => {
                prop_assert_eq!(h.degrees(), g.degrees());
                prop_assert!(h.has_edge(q[3], q[1]) && h.has_edge(q[2], q[0]));
                prop_assert!(!h.has_edge(q[3], q[0]) && !h.has_edge(q[2], q[1]));
            }
            Err(_) => prop_assert!(spec.validate(&g).is_err()),
        }
    }

    #[test]
    fn interchange_keeps_degrees_and_undoes_itself(g in arb_graph(12), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (u, v) = (a.index(g.order()), b.index(g.order()));
        let h = vertex_interchange(&g, u, v).unwrap();
        prop_assert_eq!(DegreeSequence::of(&h), DegreeSequence::of(&g));
        prop_assert_eq!(vertex_interchange(&h, u, v).unwrap(), g);
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(20)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g.clone());
        prop_assert!(graph6_encode(&g).bytes().all(|b| (63..=126).contains(&b)));
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in arb_graph_with_perm(10)) {
        prop_assert_eq!(canonical_form(&g.relabel(&perm)), canonical_form(&g));
    }

    #[test]
    fn anchor_sits_on_top_degrees(g in arb_graph(10)) {
        let seq = DegreeSequence::of(&g);
        if let Some(d) = seq.min_positive() {
            let (h, y) = anchored_realize(&seq, d).unwrap();
            prop_assert_eq!(DegreeSequence::of(&h), seq.clone());
            prop_assert_eq!(h.degree(y), d);
            let threshold = seq.terms()[d - 1];
            prop_assert!(h.neighbors(y).all(|w| h.degree(w) >= threshold));
        }
    }
}

#[test]
fn havel_hakimi_reproduces_every_sequence_through_order_seven() {
    for n in 0..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let seq = DegreeSequence::of(&g);
            assert_eq!(DegreeSequence::of(&havel_hakimi_realize(&seq).unwrap()), seq, "{g}");
        }
    }
}

#[test]
fn graphicality_matches_exhaustive_realization() {
    for n in 0..=6 {
        let realizable: HashSet<Vec<usize>> = common::labeled_graphs(n).map(|g| common::sorted_degrees(&g)).collect();
        let mut terms = vec![0usize; n];
        // Every non-increasing sequence with terms below n.
        loop {
            let mut sorted = terms.clone();
            sorted.sort_unstable();
            let seq = DegreeSequence::new(terms.clone());
            assert_eq!(is_graphical(&seq), realizable.contains(&sorted), "{seq}");
            let Some(i) = (0..n).rev().find(|&i| terms[i] + 1 < n) else { break };
            terms[i] += 1;
            for t in &mut terms[i + 1..] {
                *t = 0;
            }
        }
    }
}

#[test]
fn hundred_relabelings_per_class_through_order_seven() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let form = canonical_form(&g);
            for _ in 0..100 {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&perm)), form, "{g} {perm:?}");
            }
        }
    }
}

#[test]
fn class_counts_match_labeled_dedup() {
    for n in 0..=6 {
        let forms: HashSet<_> = common::labeled_graphs(n).map(|g| canonical_form(&g)).collect();
        assert_eq!(enumerate_graphs(n).unwrap().len(), forms.len());
    }
    let counts: Vec<usize> = (0..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn distinct_classes_are_not_isomorphic() {
    for n in 1..=5 {
        let gs = enumerate_graphs(n).unwrap();
        for (i, a) in gs.iter().enumerate() {
            for b in &gs[i + 1..] {
                assert!(!common::isomorphic(a, b), "{a} ~ {b}");
            }
        }
    }
}

#[test]
fn malformed_graph6_reports_offset() {
    assert_eq!(graph6_encode(&Graph::new(1)), "@");
    match graph6_decode("garbage\x01") {
        Err(packlab::Error::MalformedGraph6 { .. }) => {}
        other => panic!("{other:?}"),
    }
}
