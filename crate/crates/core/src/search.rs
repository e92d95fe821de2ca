//! Backtracking engines shared by the solvers.
//!
//! * [`search_realizations`] finds spanning subgraphs of a host graph whose
//!   degrees are either prescribed per vertex (f-factors) or drawn from a
//!   multiset (degree-sequence realizations).
//! * [`find_embedding`] finds an injective, edge-preserving map of a pattern
//!   graph into a host graph.

use crate::graph::{bits, Graph};
use crate::pack::SearchBudget;
use std::time::Instant;

/// Node and wall-clock accounting for one solver call.
#[derive(Debug)]
pub(crate) struct Meter {
    pub nodes: u64,
    limit: u64,
    start: Instant,
    time_limit: std::time::Duration,
    out: bool,
}

impl Meter {
    pub fn new(budget: &SearchBudget) -> Self {
        Meter { nodes: 0, limit: budget.node_limit, start: Instant::now(), time_limit: budget.time_limit, out: false }
    }

    /// Counts one node; false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.out {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limit || (self.nodes & 0xfff == 0 && self.start.elapsed() > self.time_limit) {
            self.out = true;
        }
        !self.out
    }

    pub fn millis(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Flow {
    Stop,
    Continue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// The visitor asked to stop.
    Stopped,
    /// Every solution was visited.
    Exhausted,
    OutOfBudget,
}

#[derive(Clone, Debug)]
pub(crate) enum Targets {
    /// Vertex `v` must reach degree `f[v]`.
    Fixed(Vec<usize>),
    /// Final degrees form this multiset, in any arrangement.
    Multiset(Vec<usize>),
}

/// Which vertex swaps the search may treat as equivalent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Symmetry {
    /// Visit every labeled solution.
    #[cfg_attr(not(test), allow(dead_code))]
    None,
    /// Skip solutions that are images of visited ones under an automorphism
    /// of host and partial solution. Visitors must be isomorphism-invariant.
    Isomorphic,
    /// Only guarantee that some solution is visited if one exists.
    Existence,
}

struct State<'a> {
    host: &'a Graph,
    fixed: Option<Vec<usize>>,
    /// Multiset mode: `counts[d]` copies of value `d` remain.
    counts: Vec<usize>,
    cur: Vec<usize>,
    h: Graph,
    open: u64,
    symmetry: Symmetry,
}

/// Visits spanning subgraphs of `host` meeting `targets`.
pub(crate) fn search_realizations(
    host: &Graph,
    targets: Targets,
    symmetry: Symmetry,
    meter: &mut Meter,
    visit: &mut dyn FnMut(&Graph) -> Flow,
) -> Outcome {
    let n = host.order();
    let (fixed, counts) = match targets {
        Targets::Fixed(f) => {
            if f.len() != n || f.iter().enumerate().any(|(v, &d)| d > host.degree(v)) {
                return Outcome::Exhausted;
            }
            (Some(f), Vec::new())
        }
        Targets::Multiset(terms) => {
            if terms.len() != n {
                return Outcome::Exhausted;
            }
            let mut counts = vec![0usize; n.max(1) + terms.iter().copied().max().unwrap_or(0)];
            for d in terms {
                counts[d] += 1;
            }
            (None, counts)
        }
    };
    let mut st = State { host, fixed, counts, cur: vec![0; n], h: Graph::new(n), open: host.vertex_mask(), symmetry };
    if !st.feasible() {
        return Outcome::Exhausted;
    }
    match st.step(meter, visit) {
        Some(Flow::Stop) => Outcome::Stopped,
        Some(Flow::Continue) => Outcome::Exhausted,
        None => Outcome::OutOfBudget,
    }
}

impl State<'_> {
    fn cap(&self, u: usize) -> usize {
        match &self.fixed {
            Some(f) => f[u],
            None => self.counts.iter().rposition(|&c| c > 0).unwrap_or(0),
        }
    }

    fn open_neighbors(&self, u: usize) -> u64 {
        self.host.neighbor_mask(u) & self.open & !(1 << u)
    }

    fn choose_vertex(&self) -> usize {
        let open = bits(self.open);
        match &self.fixed {
            Some(f) => open
                .max_by(|&a, &b| {
                    let ra = f[a] - self.cur[a];
                    let rb = f[b] - self.cur[b];
                    ra.cmp(&rb)
                        .then(self.open_neighbors(b).count_ones().cmp(&self.open_neighbors(a).count_ones()))
                        .then(b.cmp(&a))
                })
                .unwrap(),
            None => open
                .min_by(|&a, &b| {
                    self.open_neighbors(a)
                        .count_ones()
                        .cmp(&self.open_neighbors(b).count_ones())
                        .then(self.cur[b].cmp(&self.cur[a]))
                        .then(a.cmp(&b))
                })
                .unwrap(),
        }
    }

    /// Necessary conditions for completing the open vertices.
    fn feasible(&self) -> bool {
        let open: Vec<usize> = bits(self.open).collect();
        match &self.fixed {
            Some(f) => {
                let need: Vec<usize> = (0..self.host.order()).map(|u| f[u] - self.cur[u]).collect();
                let hungry = open.iter().fold(0u64, |m, &u| if need[u] > 0 { m | 1 << u } else { m });
                let mut residual = Vec::with_capacity(open.len());
                for &u in &open {
                    let room = (self.host.neighbor_mask(u) & hungry & !(1 << u)).count_ones() as usize;
                    if need[u] > room {
                        return false;
                    }
                    residual.push(need[u]);
                }
                residual.sort_unstable_by(|a, b| b.cmp(a));
                crate::graph::erdos_gallai(&residual)
            }
            None => {
                // Interval matching: open vertex u takes a value in
                // [cur[u], cur[u] + room(u)]; greedy by upper end is exact.
                let mut intervals: Vec<(usize, usize)> = open
                    .iter()
                    .map(|&u| (self.cur[u] + self.open_neighbors(u).count_ones() as usize, self.cur[u]))
                    .collect();
                intervals.sort_unstable();
                let mut counts = self.counts.clone();
                let mut value_sum = 0usize;
                for (hi, lo) in intervals {
                    let Some(d) = (lo..=hi.min(counts.len().saturating_sub(1))).find(|&d| counts[d] > 0) else {
                        return false;
                    };
                    counts[d] -= 1;
                    value_sum += d;
                }
                let _ = value_sum;
                let remaining: usize = self.counts.iter().enumerate().map(|(d, &c)| d * c).sum();
                let have: usize = open.iter().map(|&u| self.cur[u]).sum();
                remaining >= have && (remaining - have).is_multiple_of(2)
            }
        }
    }

    /// Groups candidate neighbors of `v` into interchangeable classes.
    fn classes(&self, v: usize, eligible: u64) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for u in bits(eligible) {
            let slot = match self.symmetry {
                Symmetry::None => None,
                _ => classes.iter().position(|c| self.swappable(v, c[0], u)),
            };
            match slot {
                Some(i) => classes[i].push(u),
                None => classes.push(vec![u]),
            }
        }
        classes
    }

    fn swappable(&self, v: usize, a: usize, b: usize) -> bool {
        if self.cur[a] != self.cur[b] {
            return false;
        }
        if let Some(f) = &self.fixed {
            if f[a] != f[b] {
                return false;
            }
        }
        let strip = !(1u64 << a | 1u64 << b);
        let (ha, hb) = (self.host.neighbor_mask(a), self.host.neighbor_mask(b));
        match self.symmetry {
            Symmetry::Existence => {
                let scope = self.open & strip & !(1 << v);
                // v is still open while its edges are being chosen.
                (ha ^ hb) & (scope | 1 << v) == 0
            }
            Symmetry::Isomorphic => {
                let (pa, pb) = (self.h.neighbor_mask(a), self.h.neighbor_mask(b));
                (ha ^ hb) & strip == 0 && (pa ^ pb) & strip == 0
            }
            Symmetry::None => false,
        }
    }

    fn step(&mut self, meter: &mut Meter, visit: &mut dyn FnMut(&Graph) -> Flow) -> Option<Flow> {
        if !meter.tick() {
            return None;
        }
        if self.open == 0 {
            return Some(visit(&self.h));
        }
        let v = self.choose_vertex();
        let cand = self.open_neighbors(v);
        let room = cand.count_ones() as usize;
        let values: Vec<usize> = match &self.fixed {
            Some(f) => vec![f[v]],
            None => (0..self.counts.len()).rev().filter(|&d| self.counts[d] > 0).collect(),
        };
        for d in values {
            if d < self.cur[v] || d - self.cur[v] > room {
                continue;
            }
            let need = d - self.cur[v];
            if self.fixed.is_none() {
                self.counts[d] -= 1;
            }
            let eligible = bits(cand).filter(|&u| self.cur[u] < self.cap(u)).fold(0u64, |m, u| m | 1 << u);
            let flow = if (eligible.count_ones() as usize) < need {
                Some(Flow::Continue)
            } else {
                let classes = self.classes(v, eligible);
                self.open &= !(1 << v);
                let r = self.pick(v, &classes, 0, need, meter, visit);
                self.open |= 1 << v;
                r
            };
            if self.fixed.is_none() {
                self.counts[d] += 1;
            }
            match flow {
                Some(Flow::Continue) => {}
                other => return other,
            }
        }
        Some(Flow::Continue)
    }

    fn pick(
        &mut self,
        v: usize,
        classes: &[Vec<usize>],
        ci: usize,
        need: usize,
        meter: &mut Meter,
        visit: &mut dyn FnMut(&Graph) -> Flow,
    ) -> Option<Flow> {
        if ci == classes.len() {
            if need > 0 {
                return Some(Flow::Continue);
            }
            if !self.feasible() {
                return Some(Flow::Continue);
            }
            return self.step(meter, visit);
        }
        let left: usize = classes[ci + 1..].iter().map(Vec::len).sum();
        let class = &classes[ci];
        let lo = need.saturating_sub(left);
        let hi = need.min(class.len());
        for k in (lo..=hi).rev() {
            for &u in &class[..k] {
                self.h.add_edge(u, v);
                self.cur[u] += 1;
            }
            self.cur[v] += k;
            let r = self.pick(v, classes, ci + 1, need - k, meter, visit);
            self.cur[v] -= k;
            for &u in &class[..k] {
                self.h.remove_edge(u, v);
                self.cur[u] -= 1;
            }
            match r {
                Some(Flow::Continue) => {}
                other => return other,
            }
        }
        Some(Flow::Continue)
    }
}

#[derive(Debug, PartialEq, Eq)]
pub(crate) enum EmbedOutcome {
    /// `map[p]` is the host vertex carrying pattern vertex `p`.
    Found(Vec<usize>),
    NotFound,
    OutOfBudget,
}

/// Injective map of `pattern` into `host` carrying edges to edges.
/// Requires `pattern.order() <= host.order()`.
pub(crate) fn find_embedding(pattern: &Graph, host: &Graph, meter: &mut Meter) -> EmbedOutcome {
    let (np, nh) = (pattern.order(), host.order());
    if np > nh {
        return EmbedOutcome::NotFound;
    }
    let order = placement_order(pattern);
    let mut pos = vec![usize::MAX; np];
    for (i, &p) in order.iter().enumerate() {
        pos[p] = i;
    }
    // Twins of the pattern are interchangeable; force increasing images.
    let prev_twin: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            order[..i].iter().rev().copied().find(|&q| {
                let strip = !(1u64 << p | 1u64 << q);
                pattern.neighbor_mask(p) & strip == pattern.neighbor_mask(q) & strip
            })
        })
        .collect();
    let mut map = vec![usize::MAX; np];
    let mut ctx = EmbedCtx { pattern, host, order: &order, prev_twin: &prev_twin, map: &mut map };
    match ctx.place(0, 0, meter) {
        Some(true) => EmbedOutcome::Found(map),
        Some(false) => EmbedOutcome::NotFound,
        None => EmbedOutcome::OutOfBudget,
    }
}

/// Highest degree first, then repeatedly the vertex with most placed
/// neighbors; isolated vertices last.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by(|&a, &b| {
                let ka = (pattern.neighbor_mask(a) & placed).count_ones();
                let kb = (pattern.neighbor_mask(b) & placed).count_ones();
                ka.cmp(&kb).then(pattern.degree(a).cmp(&pattern.degree(b))).then(b.cmp(&a))
            })
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct EmbedCtx<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: &'a [usize],
    prev_twin: &'a [Option<usize>],
    map: &'a mut Vec<usize>,
}

impl EmbedCtx<'_> {
    fn place(&mut self, i: usize, used: u64, meter: &mut Meter) -> Option<bool> {
        if !meter.tick() {
            return None;
        }
        if i == self.order.len() {
            return Some(true);
        }
        let p = self.order[i];
        let mut cand = self.host.vertex_mask() & !used;
        for q in self.pattern.neighbors(p) {
            if self.map[q] != usize::MAX {
                cand &= self.host.neighbor_mask(self.map[q]);
            }
        }
        if let Some(t) = self.prev_twin[i] {
            cand &= !crate::graph::low_bits(self.map[t] + 1);
        }
        let need = self.pattern.degree(p);
        for h in bits(cand) {
            if self.host.degree(h) < need {
                continue;
            }
            self.map[p] = h;
            match self.place(i + 1, used | 1 << h, meter) {
                Some(false) => {}
                other => return other,
            }
        }
        self.map[p] = usize::MAX;
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meter() -> Meter {
        Meter::new(&SearchBudget::default())
    }

    fn count(host: &Graph, t: Targets, s: Symmetry) -> usize {
        let mut k = 0;
        let out = search_realizations(host, t, s, &mut meter(), &mut |_| {
            k += 1;
            Flow::Continue
        });
        assert_eq!(out, Outcome::Exhausted);
        k
    }

    #[test]
    fn counts_labeled_realizations() {
        let k4 = Graph::new(4).complement();
        // Perfect matchings of K4.
        assert_eq!(count(&k4, Targets::Fixed(vec![1; 4]), Symmetry::None), 3);
        // Labeled graphs on 4 vertices with degree multiset (2,2,1,1): paths P4.
        assert_eq!(count(&k4, Targets::Multiset(vec![2, 2, 1, 1]), Symmetry::None), 12);
        // Labeled 2-regular graphs on 5 vertices: 12 five-cycles.
        let k5 = Graph::new(5).complement();
        assert_eq!(count(&k5, Targets::Fixed(vec![2; 5]), Symmetry::None), 12);
    }

    #[test]
    fn symmetry_modes_keep_existence() {
        let k5 = Graph::new(5).complement();
        assert!(count(&k5, Targets::Fixed(vec![2; 5]), Symmetry::Isomorphic) >= 1);
        assert!(count(&k5, Targets::Fixed(vec![2; 5]), Symmetry::Existence) >= 1);
        let c5 = k5.complement();
        assert_eq!(count(&c5, Targets::Fixed(vec![1; 5]), Symmetry::Existence), 0);
    }

    #[test]
    fn embedding_basics() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(find_embedding(&tri, &c4, &mut meter()), EmbedOutcome::NotFound);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        match find_embedding(&p3, &c4, &mut meter()) {
            EmbedOutcome::Found(m) => {
                for (a, b) in p3.edges() {
                    assert!(c4.has_edge(m[a], m[b]));
                }
            }
            other => panic!("{other:?}"),
        }
    }
}
