//! Equitable colorings read off a packing with a union of cliques.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pack::SearchBudget;
use crate::recognize::{build_complete, build_independent};
use crate::search::{find_embedding, EmbedOutcome, Meter};
use serde::{Deserialize, Serialize};

/// Color classes, each sorted, listed by smallest member. Empty classes
/// are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquitableColoring {
    pub classes: Vec<Vec<usize>>,
}

impl EquitableColoring {
    /// Classes partition `V(g)`, are independent in `g`, and differ in size
    /// by at most one.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.order()];
        for class in &self.classes {
            for &v in class {
                if v >= g.order() || std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
            if class.iter().any(|&u| class.iter().any(|&v| g.has_edge(u, v))) {
                return false;
            }
        }
        let sizes = self.classes.iter().map(Vec::len);
        let spread = sizes.clone().max().unwrap_or(0) - sizes.min().unwrap_or(0);
        seen.into_iter().all(|s| s) && spread <= 1
    }
}

/// `k+1` disjoint cliques whose sizes differ by at most one, on `n`
/// vertices in total.
fn clique_template(n: usize, parts: usize) -> Graph {
    (0..parts).fold(build_independent(0), |acc, i| {
        let size = n / parts + usize::from(i < n % parts);
        acc.disjoint_union(&build_complete(size))
    })
}

/// An equitable `(k+1)`-coloring of `g`, found by packing `g` with the
/// clique template: each template clique lands on an independent set.
pub fn equitable_coloring_via_packing(g: &Graph, k: usize) -> Result<EquitableColoring> {
    let degree = g.max_degree();
    if degree > k {
        return Err(Error::DegreeTooHigh { degree, k });
    }
    let n = g.order();
    let template = clique_template(n, k + 1);
    let mut meter = Meter::new(&SearchBudget::default());
    let map = match find_embedding(g, &template.complement(), &mut meter) {
        EmbedOutcome::Found(map) => map,
        EmbedOutcome::NotFound => return Err(Error::PackingFailed("no embedding into the clique template's complement".into())),
        EmbedOutcome::OutOfBudget => return Err(Error::PackingFailed("search budget ran out".into())),
    };
    let mut owner = vec![0usize; n];
    for (part, comp) in template.components().iter().enumerate() {
        for &slot in comp {
            owner[slot] = part;
        }
    }
    let mut classes: Vec<Vec<usize>> = template.components().iter().map(|_| Vec::new()).collect();
    for (v, &slot) in map.iter().enumerate() {
        classes[owner[slot]].push(v);
    }
    classes.retain(|c| !c.is_empty());
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort();
    Ok(EquitableColoring { classes })
}
