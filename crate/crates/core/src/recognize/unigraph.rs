//! Unigraphs: graphs isomorphic to every realization of their degree
//! sequence.

use crate::error::{Error, Result};
use crate::graph::{canonical_form, Graph};
use crate::pack::SearchBudget;
use crate::search::{search_realizations, Flow, Meter, Outcome, Symmetry, Targets};

pub const UNIGRAPH_ORDER_CAP: usize = 8;

pub fn is_unigraph(g: &Graph) -> Result<bool> {
    is_unigraph_with_cap(g, UNIGRAPH_ORDER_CAP)
}

/// Walks the realizations of `g`'s degree sequence and stops at the first
/// one not isomorphic to `g`.
pub fn is_unigraph_with_cap(g: &Graph, cap: usize) -> Result<bool> {
    let n = g.order();
    if n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let own = canonical_form(g);
    let complete = Graph::new(n).complement();
    let mut meter = Meter::new(&SearchBudget::unlimited());
    let mut unique = true;
    let outcome = search_realizations(&complete, Targets::Fixed(degrees), Symmetry::Isomorphic, &mut meter, &mut |h| {
        if canonical_form(h) == own {
            Flow::Continue
        } else {
            unique = false;
            Flow::Stop
        }
    });
    debug_assert_ne!(outcome, Outcome::OutOfBudget);
    Ok(unique)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;
    use crate::recognize::*;
    use std::collections::HashMap;

    #[test]
    fn examples() {
        assert!(is_unigraph(&build_cycle_edges(5).unwrap()).unwrap());
        assert!(!is_unigraph(&build_cycle_edges(6).unwrap()).unwrap());
        assert!(!is_unigraph(&build_disjoint_copies(2, &build_complete(3))).unwrap());
        assert!(is_unigraph(&build_u2(1, 2).unwrap()).unwrap());
        assert!(is_unigraph(&build_path_edges(3)).unwrap());
        assert_eq!(is_unigraph(&Graph::new(9)), Err(Error::OrderTooLarge { order: 9, cap: 8 }));
    }

    #[test]
    fn agrees_with_class_counting() {
        // A graph is a unigraph iff no other class shares its sequence.
        for n in 0..=6 {
            let graphs = enumerate_graphs(n).unwrap();
            let mut per_sequence: HashMap<Vec<usize>, usize> = HashMap::new();
            for g in &graphs {
                let mut d = g.degrees();
                d.sort_unstable();
                *per_sequence.entry(d).or_default() += 1;
            }
            for g in &graphs {
                let mut d = g.degrees();
                d.sort_unstable();
                assert_eq!(is_unigraph(g).unwrap(), per_sequence[&d] == 1, "{g}");
            }
        }
    }
}
