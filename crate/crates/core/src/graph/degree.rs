use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Multiset of vertex degrees, stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(mut terms: Vec<usize>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(terms)
    }

    pub fn of(g: &Graph) -> Self {
        DegreeSequence::new(g.degrees())
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Smallest positive term.
    pub fn min_positive(&self) -> Option<usize> {
        self.0.iter().copied().filter(|&d| d > 0).min()
    }

    pub fn is_graphical(&self) -> bool {
        is_graphical(self)
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence::new(v)
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses comma- or whitespace-separated terms, e.g. `2,2,2,2,2`.
    fn from_str(s: &str) -> Result<Self> {
        let terms = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::BadParameter(format!("bad degree term {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeSequence::new(terms))
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Erdős–Gallai test on a non-increasing sequence.
pub(crate) fn erdos_gallai(terms: &[usize]) -> bool {
    let n = terms.len();
    let total: usize = terms.iter().sum();
    if total % 2 == 1 || (n > 0 && terms[0] > n - 1) {
        return false;
    }
    let mut prefix = 0usize;
    for k in 1..=n {
        prefix += terms[k - 1];
        let tail: usize = terms[k..].iter().map(|&d| d.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// True iff some simple graph realizes `seq`.
pub fn is_graphical(seq: &DegreeSequence) -> bool {
    erdos_gallai(&seq.0)
}

/// Havel–Hakimi realization. Vertex `i` receives degree `seq.terms()[i]`;
/// ties are broken by smallest index, so the result is deterministic.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<Graph> {
    if !is_graphical(seq) {
        return Err(Error::NotGraphical(seq.0.clone()));
    }
    let n = seq.len();
    let mut g = Graph::new(n);
    let mut residual = seq.0.clone();
    lay_off_all(&mut g, &mut residual)?;
    Ok(g)
}

/// Connects `v` to the `residual[v]` other vertices of highest residual
/// degree (ties by smallest index), restricted to vertices not yet adjacent.
fn lay_off(g: &mut Graph, residual: &mut [usize], v: usize) -> Result<()> {
    let need = residual[v];
    let mut others: Vec<usize> = (0..residual.len())
        .filter(|&u| u != v && residual[u] > 0 && !g.has_edge(u, v))
        .collect();
    others.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
    if others.len() < need {
        return Err(Error::NotGraphical(residual.to_vec()));
    }
    for &u in &others[..need] {
        g.add_edge(u, v);
        residual[u] -= 1;
    }
    residual[v] = 0;
    Ok(())
}

fn lay_off_all(g: &mut Graph, residual: &mut [usize]) -> Result<()> {
    loop {
        let Some(v) = (0..residual.len()).filter(|&v| residual[v] > 0).max_by(|&a, &b| residual[a].cmp(&residual[b]).then(b.cmp(&a))) else {
            return Ok(());
        };
        lay_off(g, residual, v)?;
    }
}

/// Realization in which an anchor vertex `y` of degree `anchor_degree` is
/// adjacent to the `anchor_degree` highest-degree other vertices.
///
/// `anchor_degree` must be the smallest positive term. The anchor is the
/// last vertex carrying that degree.
pub fn anchored_realize(seq: &DegreeSequence, anchor_degree: usize) -> Result<(Graph, usize)> {
    if !is_graphical(seq) {
        return Err(Error::NotGraphical(seq.0.clone()));
    }
    let min_pos = seq.min_positive().ok_or(Error::NoPositiveTerm)?;
    if anchor_degree != min_pos {
        return Err(Error::BadParameter(format!(
            "anchor degree {anchor_degree} is not the minimum positive term {min_pos}"
        )));
    }
    let n = seq.len();
    let y = (0..n).rev().find(|&v| seq.0[v] == anchor_degree).expect("min positive term present");
    let mut g = Graph::new(n);
    let mut residual = seq.0.clone();
    // Laying off any single vertex onto the highest residual degrees keeps a
    // graphical sequence graphical.
    lay_off(&mut g, &mut residual, y)?;
    lay_off_all(&mut g, &mut residual)?;
    Ok((g, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::low_bits;
    use std::collections::HashSet;

    fn seq(t: &[usize]) -> DegreeSequence {
        DegreeSequence::new(t.to_vec())
    }

    /// Every sorted degree sequence of a labeled graph on `n` vertices.
    fn realizable_sequences(n: usize) -> HashSet<Vec<usize>> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut d = vec![0usize; n];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d[u] += 1;
                    d[v] += 1;
                }
            }
            d.sort_unstable_by(|a, b| b.cmp(a));
            out.insert(d);
        }
        out
    }

    fn nonincreasing(n: usize, max: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for d in (0..=cap).rev() {
                cur.push(d);
                go(n, d, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn graphical_matches_exhaustive_search() {
        for n in 0..=6 {
            let real = realizable_sequences(n);
            for s in nonincreasing(n, n) {
                assert_eq!(erdos_gallai(&s), real.contains(&s), "sequence {s:?}");
            }
        }
    }

    #[test]
    fn graphical_examples() {
        assert!(is_graphical(&seq(&[3, 3, 3, 3])));
        assert!(!is_graphical(&seq(&[3, 3, 1, 1])));
        assert!(!is_graphical(&seq(&[5, 1, 1, 1, 1])));
        assert!(is_graphical(&seq(&[])));
    }

    #[test]
    fn degree_sequence_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(DegreeSequence::of(&k4).terms(), &[3, 3, 3, 3]);
        let c5k1 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(DegreeSequence::of(&c5k1).terms(), &[2, 2, 2, 2, 2, 0]);
        assert_eq!(DegreeSequence::of(&Graph::new(3)).terms(), &[0, 0, 0]);
    }

    #[test]
    fn havel_hakimi_examples() {
        let e = havel_hakimi_realize(&seq(&[1, 1])).unwrap();
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let k4 = havel_hakimi_realize(&seq(&[3, 3, 3, 3])).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let c5 = havel_hakimi_realize(&seq(&[2, 2, 2, 2, 2])).unwrap();
        assert!(c5.is_connected() && c5.is_regular() && c5.edge_count() == 5);
        assert!(matches!(havel_hakimi_realize(&seq(&[3, 3, 1, 1])), Err(Error::NotGraphical(_))));
    }

    #[test]
    fn havel_hakimi_realizes_every_small_sequence() {
        for n in 0..=7 {
            for s in nonincreasing(n, n.saturating_sub(1)) {
                if !erdos_gallai(&s) {
                    continue;
                }
                let g = havel_hakimi_realize(&DegreeSequence::new(s.clone())).unwrap();
                assert_eq!(g.degrees(), s);
            }
        }
    }

    #[test]
    fn anchored_examples() {
        let (g, y) = anchored_realize(&seq(&[2, 2, 2, 2, 2, 0]), 2).unwrap();
        assert_eq!(g.degree(y), 2);
        assert!(g.neighbors(y).all(|u| g.degree(u) == 2));

        let (g, y) = anchored_realize(&seq(&[3, 2, 2, 2, 1]), 1).unwrap();
        assert_eq!(g.degree(y), 1);
        assert_eq!(g.neighbors(y).collect::<Vec<_>>(), vec![0]);
        assert_eq!(g.degree(0), 3);

        let (g, y) = anchored_realize(&seq(&[1, 1]), 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(y < 2);

        assert_eq!(anchored_realize(&seq(&[0, 0]), 1).unwrap_err(), Error::NoPositiveTerm);
        assert!(matches!(anchored_realize(&seq(&[2, 2, 2]), 1), Err(Error::BadParameter(_))));
        assert!(matches!(anchored_realize(&seq(&[3, 1]), 1), Err(Error::NotGraphical(_))));
    }

    #[test]
    fn anchored_neighbors_are_top_degrees() {
        for n in 1..=7 {
            for s in nonincreasing(n, n - 1) {
                if !erdos_gallai(&s) {
                    continue;
                }
                let ds = DegreeSequence::new(s.clone());
                let Some(a) = ds.min_positive() else { continue };
                let (g, y) = anchored_realize(&ds, a).unwrap();
                assert_eq!(g.degrees(), s);
                // Threshold: the a-th largest degree among vertices other than y.
                let mut others: Vec<usize> = (0..n).filter(|&v| v != y).map(|v| s[v]).collect();
                others.sort_unstable_by(|a, b| b.cmp(a));
                let threshold = others[a - 1];
                assert!(g.neighbors(y).all(|u| g.degree(u) >= threshold), "{s:?}");
                assert_eq!(g.neighbor_mask(y) & !low_bits(n), 0);
            }
        }
    }

    #[test]
    fn parse_sequence() {
        let s: DegreeSequence = "1, 2 3".parse().unwrap();
        assert_eq!(s.terms(), &[3, 2, 1]);
        assert!("1,x".parse::<DegreeSequence>().is_err());
    }
}
