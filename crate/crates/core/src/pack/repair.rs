use super::{Mode, NearPacking, PackingResult, SearchBudget, Stats, Status};
use crate::graph::{bad_pair_count, vertex_interchange, Graph};
use crate::search::Meter;

/// Local search from a near-packing: apply the first move that strictly
/// lowers the number of bad pairs, until none remain or no move helps.
///
/// Moves, in order: interchanging the anchor with an isolated vertex, any
/// vertex interchange, exchanging two edges (one bad) for the two crossing
/// non-edges, and rotating three edges (one bad) along an alternating
/// 6-cycle. Never reports [`Status::Unpackable`].
pub fn exchange_repair(np: &NearPacking, g2: &Graph, budget: &SearchBudget) -> PackingResult {
    let mut meter = Meter::new(budget);
    let mut h = np.realization.clone();
    let mut anchor = np.anchor;
    let mut bad = bad_pair_count(&h, g2);
    while bad > 0 {
        let Some((next, next_anchor)) = improve(&h, anchor, g2, bad, &mut meter) else {
            break;
        };
        h = next;
        anchor = next_anchor;
        bad = bad_pair_count(&h, g2);
    }
    let stats = Stats::of(&meter);
    if bad == 0 {
        PackingResult::packed(Mode::Sequence, h, stats)
    } else {
        PackingResult::without_witness(Mode::Sequence, Status::BudgetExhausted, stats)
    }
}

fn improve(h: &Graph, anchor: usize, g2: &Graph, bad: usize, meter: &mut Meter) -> Option<(Graph, usize)> {
    let n = h.order();
    let better = |cand: &Graph| bad_pair_count(cand, g2) < bad;

    let isolates = (0..n).filter(|&v| v != anchor && h.degree(v) == 0);
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    for (u, v) in isolates.map(|v| (anchor, v)).chain(pairs) {
        if !meter.tick() {
            return None;
        }
        let cand = vertex_interchange(h, u, v).expect("vertices in range");
        if better(&cand) {
            let moved = if anchor == u { v } else if anchor == v { u } else { anchor };
            return Some((cand, moved));
        }
    }

    let edges: Vec<(usize, usize)> = h.edges().collect();
    let bad_edges: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| g2.has_edge(a, b)).collect();
    let oriented = |e: &[(usize, usize)]| e.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect::<Vec<_>>();
    let all = oriented(&edges);

    for &(a, b) in &oriented(&bad_edges) {
        for &(c, d) in &all {
            if !meter.tick() {
                return None;
            }
            if c == a || c == b || d == a || d == b || h.has_edge(a, c) || h.has_edge(b, d) {
                continue;
            }
            let mut cand = h.clone();
            cand.remove_edge(a, b);
            cand.remove_edge(c, d);
            cand.add_edge(a, c);
            cand.add_edge(b, d);
            if better(&cand) {
                return Some((cand, anchor));
            }
        }
    }

    for &(a, b) in &oriented(&bad_edges) {
        for &(c, d) in &all {
            if [a, b].contains(&c) || [a, b].contains(&d) || h.has_edge(b, c) {
                continue;
            }
            for &(e, f) in &all {
                if !meter.tick() {
                    return None;
                }
                if [a, b, c, d].contains(&e) || [a, b, c, d].contains(&f) || h.has_edge(d, e) || h.has_edge(f, a) {
                    continue;
                }
                let mut cand = h.clone();
                for (x, y) in [(a, b), (c, d), (e, f)] {
                    cand.remove_edge(x, y);
                }
                for (x, y) in [(b, c), (d, e), (f, a)] {
                    cand.add_edge(x, y);
                }
                if better(&cand) {
                    return Some((cand, anchor));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DegreeSequence;
    use crate::pack::near_packing;
    use crate::recognize::*;

    #[test]
    fn clean_start_is_packed_at_once() {
        let p = build_path_edges(3);
        let np = NearPacking { realization: p.clone(), anchor: 0 };
        let r = exchange_repair(&np, &Graph::new(4), &SearchBudget::default());
        assert_eq!(r.witness, Some(p));
    }

    #[test]
    fn one_exchange_fixes_the_path() {
        let p = build_path_edges(3);
        let g2 = Graph::from_edges(4, &[(1, 2)]).unwrap();
        let np = NearPacking { realization: p.clone(), anchor: 1 };
        let r = exchange_repair(&np, &g2, &SearchBudget::default());
        let w = r.witness.unwrap();
        assert!(w.is_edge_disjoint(&g2));
        assert_eq!(DegreeSequence::of(&w), DegreeSequence::of(&p));
    }

    #[test]
    fn unpackable_pair_is_not_claimed() {
        let three_k2 = build_disjoint_copies(3, &build_complete(2));
        let k33 = build_complete_bipartite(3, 3);
        let np = near_packing(&three_k2, &k33, &SearchBudget::default()).unwrap();
        if let Some(np) = np {
            let r = exchange_repair(&np, &k33, &SearchBudget::default());
            assert_eq!(r.status, Status::BudgetExhausted);
            assert!(r.witness.is_none());
        }
    }

    #[test]
    fn witnesses_never_share_edges() {
        let b = SearchBudget::default();
        for n in 2..=5 {
            let graphs = crate::graph::enumerate_graphs(n).unwrap();
            for g1 in graphs.iter().filter(|g| g.edge_count() > 0) {
                for g2 in &graphs {
                    let Some(np) = near_packing(g1, g2, &b).unwrap() else { continue };
                    let r = exchange_repair(&np, g2, &b);
                    assert_ne!(r.status, Status::Unpackable);
                    if let Some(w) = r.witness {
                        assert!(w.is_edge_disjoint(g2));
                        assert_eq!(DegreeSequence::of(&w), DegreeSequence::of(g1));
                    }
                }
            }
        }
    }
}
