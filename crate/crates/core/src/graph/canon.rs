//! Canonical labeling by equitable refinement and individualization.
//!
//! Components are canonized separately and concatenated in sorted order.
//! Inside a component the search tree is pruned only by twins (vertices
//! with equal open or closed neighborhoods), whose transposition is an
//! automorphism fixing the current partition. That is enough at desk scale.

use super::{bits, Graph};
use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

/// Isomorphism-invariant encoding plus the labeling that produced it.
///
/// Equality, ordering and hashing look at `bytes` only.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub bytes: Vec<u8>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.bytes == other.bytes
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bytes.hash(state)
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bytes.cmp(&other.bytes)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut parts: Vec<(usize, Vec<u64>, Vec<usize>)> = g
        .components()
        .into_iter()
        .map(|comp| {
            let sub = g.induced_subgraph(&comp);
            let (rows, order) = canon_connected(&sub);
            (comp.len(), rows, order.into_iter().map(|i| comp[i]).collect())
        })
        .collect();
    parts.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
    let mut labeling = vec![0; n];
    let mut pos = 0;
    for (_, _, order) in &parts {
        for &v in order {
            labeling[v] = pos;
            pos += 1;
        }
    }
    let relabeled = g.relabel(&labeling);
    let mut bytes = vec![n as u8];
    bytes.extend_from_slice(super::graph6_encode(&relabeled).as_bytes());
    CanonicalForm { bytes, labeling }
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_form(g).labeling)
}

type Cells = Vec<Vec<usize>>;

/// Returns the best leaf's permuted adjacency rows and its vertex order.
fn canon_connected(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let n = g.order();
    if n <= 1 {
        return (vec![0; n], (0..n).collect());
    }
    let twin_key: Vec<(u64, u64)> = (0..n).map(|v| (g.neighbor_mask(v), g.neighbor_mask(v) | 1 << v)).collect();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    search(g, cells, &twin_key, &mut best);
    best.expect("search visits at least one leaf")
}

fn are_twins(key: &[(u64, u64)], a: usize, b: usize) -> bool {
    let strip = !(1u64 << a | 1u64 << b);
    key[a].0 & strip == key[b].0 & strip
}

fn search(g: &Graph, cells: Cells, twin_key: &[(u64, u64)], best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let target = cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = permuted_rows(g, &order);
        if best.as_ref().is_none_or(|(b, _)| rows > *b) {
            *best = Some((rows, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    let mut members = cells[t].clone();
    members.sort_unstable();
    for &x in &members {
        if tried.iter().any(|&y| are_twins(twin_key, x, y)) {
            continue;
        }
        tried.push(x);
        let mut next = cells.clone();
        let rest: Vec<usize> = next[t].iter().copied().filter(|&v| v != x).collect();
        next[t] = vec![x];
        next.insert(t + 1, rest);
        refine(g, &mut next);
        search(g, next, twin_key, best);
    }
}

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Splits are ordered by neighbor count, so the result is label-invariant.
fn refine(g: &Graph, cells: &mut Cells) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: usize| (g.neighbor_mask(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut groups: Cells = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        groups.push(Vec::new());
                        last = Some(k);
                    }
                    groups.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, groups);
                continue 'outer;
            }
        }
        return;
    }
}

fn permuted_rows(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| bits(g.neighbor_mask(v)).fold(0u64, |m, u| m | 1 << (63 - pos[u])))
        .collect()
}
