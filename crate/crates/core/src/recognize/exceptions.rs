//! The four exceptional families of the half-BEC degree-sequence theorem.

use super::{build_complete, build_complete_bipartite, build_cycle_edges, build_disjoint_copies, find_clique};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A matched exceptional family. `delta1`/`delta2` are the maximum degrees
/// of the first and second graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum ExceptionKind {
    /// `C^5 ∪ K^1` against `2K^3`.
    F1,
    /// `K^{Δ1+1} ∪ I^{Δ1Δ2−1}` against `Δ1 K^{Δ2+1}`, `Δ2 ≤ Δ1`.
    F2 { delta1: usize, delta2: usize },
    /// `Δ2 K^2` against `K^{Δ2,Δ2}`, `Δ2` odd.
    F3 { delta2: usize },
    /// `Δ2 K^2` against a graph containing `K^{Δ2+1}`.
    F4 { delta2: usize },
}

impl fmt::Display for ExceptionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionKind::F1 => write!(f, "F1"),
            ExceptionKind::F2 { delta1, delta2 } => write!(f, "F2(delta1={delta1}, delta2={delta2})"),
            ExceptionKind::F3 { delta2 } => write!(f, "F3(delta2={delta2})"),
            ExceptionKind::F4 { delta2 } => write!(f, "F4(delta2={delta2})"),
        }
    }
}

fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

/// Every family the ordered pair matches, up to isomorphism, sorted.
pub fn match_exceptions(g1: &Graph, g2: &Graph) -> Result<Vec<ExceptionKind>> {
    if g1.order() != g2.order() {
        return Err(Error::SizeMismatch(g1.order(), g2.order()));
    }
    let n = g1.order();
    let (d1, d2) = (g1.max_degree(), g2.max_degree());
    let mut found = Vec::new();

    if n == 6 && d1 == 2 && d2 == 2 {
        let c5k1 = build_cycle_edges(5).expect("five edges").with_isolates(1);
        let two_k3 = build_disjoint_copies(2, &build_complete(3));
        if isomorphic(g1, &c5k1) && isomorphic(g2, &two_k3) {
            found.push(ExceptionKind::F1);
        }
    }

    if d1 >= 1 && d2 >= 1 && d2 <= d1 && n == d1 * (d2 + 1) {
        let first = build_complete(d1 + 1).with_isolates(d1 * d2 - 1);
        let second = build_disjoint_copies(d1, &build_complete(d2 + 1));
        if isomorphic(g1, &first) && isomorphic(g2, &second) {
            found.push(ExceptionKind::F2 { delta1: d1, delta2: d2 });
        }
    }

    let perfect_matching = d2 >= 1 && n == 2 * d2 && g1.degrees().iter().all(|&d| d == 1);
    if perfect_matching {
        if d2 % 2 == 1 && isomorphic(g2, &build_complete_bipartite(d2, d2)) {
            found.push(ExceptionKind::F3 { delta2: d2 });
        }
        if find_clique(g2, d2 + 1).is_some() {
            found.push(ExceptionKind::F4 { delta2: d2 });
        }
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::build_independent;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn k(m: usize) -> Graph {
        build_complete(m)
    }

    #[test]
    fn listed_examples() {
        let c5k1 = build_cycle_edges(5).unwrap().with_isolates(1);
        let two_k3 = build_disjoint_copies(2, &k(3));
        assert_eq!(match_exceptions(&c5k1, &two_k3).unwrap(), vec![ExceptionKind::F1]);

        let three_k2 = build_disjoint_copies(3, &k(2));
        let k33 = build_complete_bipartite(3, 3);
        assert_eq!(match_exceptions(&three_k2, &k33).unwrap(), vec![ExceptionKind::F3 { delta2: 3 }]);

        let k3_i3 = k(3).disjoint_union(&build_independent(3));
        assert_eq!(match_exceptions(&k3_i3, &two_k3).unwrap(), vec![ExceptionKind::F2 { delta1: 2, delta2: 2 }]);

        let k4_k2 = k(4).disjoint_union(&k(2));
        assert_eq!(match_exceptions(&three_k2, &k4_k2).unwrap(), vec![ExceptionKind::F4 { delta2: 3 }]);

        let two_k2 = build_disjoint_copies(2, &k(2));
        let c4 = build_cycle_edges(4).unwrap();
        assert!(match_exceptions(&two_k2, &c4).unwrap().is_empty());
    }

    #[test]
    fn single_edge_pair_matches_three_families() {
        // Δ1 = Δ2 = 1: K^2 ∪ I^0 against 1·K^2 also fits the second family.
        let got = match_exceptions(&k(2), &k(2)).unwrap();
        assert_eq!(
            got,
            vec![ExceptionKind::F2 { delta1: 1, delta2: 1 }, ExceptionKind::F3 { delta2: 1 }, ExceptionKind::F4 { delta2: 1 }]
        );
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(match_exceptions(&k(2), &k(3)), Err(Error::SizeMismatch(2, 3)));
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pairs = [
            (build_cycle_edges(5).unwrap().with_isolates(1), build_disjoint_copies(2, &k(3))),
            (k(4).with_isolates(8), build_disjoint_copies(3, &k(4))),
            (build_disjoint_copies(3, &k(2)), build_complete_bipartite(3, 3)),
            (build_disjoint_copies(3, &k(2)), k(4).with_isolates(2)),
            (build_disjoint_copies(2, &k(2)), build_cycle_edges(4).unwrap()),
        ];
        for (a, b) in &pairs {
            let expected = match_exceptions(a, b).unwrap();
            for _ in 0..20 {
                let mut p: Vec<usize> = (0..a.order()).collect();
                let mut q = p.clone();
                p.shuffle(&mut rng);
                q.shuffle(&mut rng);
                assert_eq!(match_exceptions(&a.relabel(&p), &b.relabel(&q)).unwrap(), expected);
            }
        }
    }
}
