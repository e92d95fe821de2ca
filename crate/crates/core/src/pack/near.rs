use super::{exchange_repair, pack_sequence_into, same_order, SearchBudget, Status};
use crate::error::{Error, Result};
use crate::graph::{anchored_realize, bad_pair_count, DegreeSequence, Graph};
use serde::{Deserialize, Serialize};

/// A realization whose bad pairs against `g2` all contain `anchor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearPacking {
    pub realization: Graph,
    pub anchor: usize,
}

impl NearPacking {
    pub fn bad_pair_count(&self, g2: &Graph) -> usize {
        bad_pair_count(&self.realization, g2)
    }

    /// Structural check against the instance: same degree multiset as
    /// `g1`, anchor degree `δ₊(g1)`, every bad pair at the anchor.
    pub fn is_valid_for(&self, g1: &Graph, g2: &Graph) -> bool {
        let h = &self.realization;
        let y = self.anchor;
        h.order() == g2.order()
            && y < h.order()
            && DegreeSequence::of(h) == DegreeSequence::of(g1)
            && g1.delta_plus().is_ok_and(|d| h.degree(y) == d)
            && (0..h.order()).filter(|&v| v != y).all(|v| h.neighbor_mask(v) & g2.neighbor_mask(v) & !(1 << y) == 0)
    }
}

/// Builds a near-packing recursively: realize `π(g1)` with an anchor `y`
/// of minimum positive degree adjacent to top-degree vertices, drop `y`'s
/// edges, pack the reduced sequence with `g2`, then attach an isolated
/// vertex to vertices of the reduced degrees, preferring non-neighbors in
/// `g2`. `None` when the reduced sequence does not pack.
pub fn near_packing(g1: &Graph, g2: &Graph, budget: &SearchBudget) -> Result<Option<NearPacking>> {
    same_order(g1, g2)?;
    if g1.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    near_for_sequence(&DegreeSequence::of(g1), g2, budget)
}

fn near_for_sequence(seq: &DegreeSequence, g2: &Graph, budget: &SearchBudget) -> Result<Option<NearPacking>> {
    let delta = seq.min_positive().ok_or(Error::NoPositiveTerm)?;
    let (f, y) = anchored_realize(seq, delta)?;
    let mut reduced = f.clone();
    for w in f.neighbors(y) {
        reduced.remove_edge(y, w);
    }
    let Some(base) = pack_reduced(&DegreeSequence::of(&reduced), g2, budget)? else {
        return Ok(None);
    };
    let mut need: Vec<usize> = f.neighbors(y).map(|w| f.degree(w) - 1).collect();
    need.sort_unstable();

    let deg = base.degrees();
    let mut best: Option<(usize, usize, Vec<usize>)> = None;
    for anchor in (0..base.order()).filter(|&v| deg[v] == 0) {
        let avoid = g2.neighbor_mask(anchor);
        let mut chosen = Vec::with_capacity(need.len());
        let mut bad = 0;
        let mut ok = true;
        let mut i = 0;
        while i < need.len() {
            let value = need[i];
            let count = need[i..].iter().take_while(|&&d| d == value).count();
            let mut pool: Vec<usize> = (0..base.order()).filter(|&v| v != anchor && deg[v] == value).collect();
            pool.sort_by_key(|&v| (avoid >> v & 1, v));
            if pool.len() < count {
                ok = false;
                break;
            }
            for &v in &pool[..count] {
                bad += (avoid >> v & 1) as usize;
                chosen.push(v);
            }
            i += count;
        }
        if ok && best.as_ref().is_none_or(|(b, _, _)| bad < *b) {
            best = Some((bad, anchor, chosen));
        }
    }
    let (_, anchor, chosen) = best.expect("the stripped vertex leaves an isolate of each needed degree");
    let mut h = base;
    for v in chosen {
        h.add_edge(anchor, v);
    }
    Ok(Some(NearPacking { realization: h, anchor }))
}

/// Packs `seq` with `g2`: near-packing plus repair first, exact search
/// after. `None` when the exact search proves no packing exists.
fn pack_reduced(seq: &DegreeSequence, g2: &Graph, budget: &SearchBudget) -> Result<Option<Graph>> {
    if seq.sum() == 0 {
        return Ok(Some(Graph::new(g2.order())));
    }
    if let Some(np) = near_for_sequence(seq, g2, budget)? {
        let repaired = exchange_repair(&np, g2, budget);
        if let Some(w) = repaired.witness {
            return Ok(Some(w));
        }
    }
    let exact = pack_sequence_into(seq, g2, budget)?;
    match exact.status {
        Status::Packed => Ok(exact.witness),
        Status::Unpackable => Ok(None),
        Status::BudgetExhausted => Err(Error::BudgetExhausted),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::*;

    #[test]
    fn examples() {
        let b = SearchBudget::default();
        let k2 = build_complete(2);
        let np = near_packing(&k2, &k2, &b).unwrap().unwrap();
        assert_eq!(np.realization, k2);
        assert_eq!(np.bad_pair_count(&k2), 1);
        assert!(np.is_valid_for(&k2, &k2));

        let c5k1 = build_cycle_edges(5).unwrap().with_isolates(1);
        let two_k3 = build_disjoint_copies(2, &build_complete(3));
        let np = near_packing(&c5k1, &two_k3, &b).unwrap().unwrap();
        assert!(np.is_valid_for(&c5k1, &two_k3));
        assert!(np.bad_pair_count(&two_k3) >= 1);

        let p = build_path_edges(3);
        let np = near_packing(&p, &Graph::new(4), &b).unwrap().unwrap();
        assert_eq!(np.bad_pair_count(&Graph::new(4)), 0);

        assert_eq!(near_packing(&Graph::new(3), &Graph::new(3), &b), Err(Error::NoEdges));
    }

    #[test]
    fn valid_on_all_small_pairs_where_it_exists() {
        let b = SearchBudget::default();
        for n in 2..=5 {
            let graphs = crate::graph::enumerate_graphs(n).unwrap();
            for g1 in graphs.iter().filter(|g| g.edge_count() > 0) {
                for g2 in &graphs {
                    if let Some(np) = near_packing(g1, g2, &b).unwrap() {
                        assert!(np.is_valid_for(g1, g2), "{g1} {g2}");
                    }
                }
            }
        }
    }
}
