//! One representative per isomorphism class, by vertex extension.
//!
//! Every graph on `n` vertices is a one-vertex extension of some graph on
//! `n - 1` vertices, so extending each class representative by every
//! neighbor subset and deduplicating by canonical form is complete.

use super::{canonical_form, Graph};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

/// Default enumeration cap. Order 9 has 274668 classes.
pub const DEFAULT_ORDER_CAP: usize = 9;

fn cache() -> &'static Mutex<HashMap<usize, Vec<Graph>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Graph>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All graphs of order `n` up to isomorphism, as canonical representatives
/// sorted by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_with_cap(n, DEFAULT_ORDER_CAP)
}

pub fn enumerate_graphs_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    if let Some(v) = cache().lock().unwrap().get(&n) {
        return Ok(v.clone());
    }
    let out = if n == 0 {
        vec![Graph::new(0)]
    } else {
        let smaller = enumerate_graphs_with_cap(n - 1, cap)?;
        let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for base in &smaller {
            for mask in 0u64..(1 << (n - 1)) {
                let mut g = base.with_isolates(1);
                for u in super::bits(mask) {
                    g.add_edge(u, n - 1);
                }
                let cf = canonical_form(&g);
                classes.entry(cf.bytes).or_insert_with(|| g.relabel(&cf.labeling));
            }
        }
        classes.into_values().collect()
    };
    cache().lock().unwrap().insert(n, out.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        assert_eq!(enumerate_graphs(0).unwrap(), vec![Graph::new(0)]);
    }

    #[test]
    fn counts_through_order_seven() {
        assert_eq!(enumerate_graphs(6).unwrap().len(), 156);
        assert_eq!(enumerate_graphs(7).unwrap().len(), 1044);
    }

    #[test]
    fn forms_survive_random_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=7 {
            for g in enumerate_graphs(n).unwrap() {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&g.relabel(&perm)), canonical_form(&g), "{g}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(enumerate_graphs_with_cap(5, 4), Err(Error::OrderTooLarge { order: 5, cap: 4 }));
    }

    #[test]
    fn dedup_of_all_labeled_graphs_matches() {
        for n in 0..=5 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut forms = HashSet::new();
            for mask in 0u32..(1 << pairs.len()) {
                let mut g = Graph::new(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                forms.insert(canonical_form(&g).bytes);
            }
            let listed: HashSet<Vec<u8>> = enumerate_graphs(n).unwrap().iter().map(|g| canonical_form(g).bytes).collect();
            assert_eq!(forms, listed, "order {n}");
        }
    }

    #[test]
    fn deterministic_order() {
        assert_eq!(enumerate_graphs(4).unwrap(), enumerate_graphs(4).unwrap());
        let forms: Vec<_> = enumerate_graphs(5).unwrap().iter().map(canonical_form).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
    }
}
