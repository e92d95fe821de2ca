use super::{same_order, Mode, PackingResult, SearchBudget, Stats, Status};
use crate::error::Result;
use crate::graph::{bits, DegreeSequence, Graph};
use crate::search::{search_realizations, Flow, Meter, Outcome, Symmetry, Targets};
use std::collections::HashMap;

/// Looks for a packing whose components realize `g1`'s components one for
/// one: each non-trivial component gets its own vertex set `X` and a
/// connected realization inside the complement of `g2[X]`.
pub fn pack_component_wise(g1: &Graph, g2: &Graph, budget: &SearchBudget) -> Result<PackingResult> {
    same_order(g1, g2)?;
    let mut parts: Vec<DegreeSequence> = g1
        .components()
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| DegreeSequence::of(&g1.induced_subgraph(c)))
        .collect();
    parts.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.terms().cmp(a.terms())));
    let mut search = Placement {
        host: g2.complement(),
        parts,
        meter: Meter::new(budget),
        cache: HashMap::new(),
        placed: Graph::new(g1.order()),
    };
    let found = search.place(0, search.host.vertex_mask(), 0);
    let stats = Stats::of(&search.meter);
    Ok(match found {
        Some(true) => PackingResult::packed(Mode::ComponentWise, search.placed, stats),
        Some(false) => PackingResult::without_witness(Mode::ComponentWise, Status::Unpackable, stats),
        None => PackingResult::without_witness(Mode::ComponentWise, Status::BudgetExhausted, stats),
    })
}

struct Placement {
    host: Graph,
    parts: Vec<DegreeSequence>,
    meter: Meter,
    cache: HashMap<(u64, usize), Option<Graph>>,
    placed: Graph,
}

impl Placement {
    /// `None` when the budget ran out.
    fn place(&mut self, i: usize, free: u64, prev_min: usize) -> Option<bool> {
        if i == self.parts.len() {
            return Some(true);
        }
        let size = self.parts[i].len();
        let same_as_prev = i > 0 && self.parts[i] == self.parts[i - 1];
        let mut candidates = Vec::new();
        subsets(free, size, &mut |x| candidates.push(x));
        for x in candidates {
            if same_as_prev && (x.trailing_zeros() as usize) <= prev_min {
                continue;
            }
            if !self.meter.tick() {
                return None;
            }
            let Some(real) = self.realize(x, i)? else {
                continue;
            };
            let verts: Vec<usize> = bits(x).collect();
            let lifted = real.lift(self.placed.order(), &verts);
            let before = self.placed.clone();
            self.placed = self.placed.union(&lifted);
            match self.place(i + 1, free & !x, x.trailing_zeros() as usize) {
                Some(false) => self.placed = before,
                other => return other,
            }
        }
        Some(false)
    }

    /// Connected realization of part `i` inside the host on `x`, cached.
    fn realize(&mut self, x: u64, i: usize) -> Option<Option<Graph>> {
        // Identical parts share a cache slot.
        let key_part = self.parts.iter().position(|p| *p == self.parts[i]).unwrap();
        if let Some(hit) = self.cache.get(&(x, key_part)) {
            return Some(hit.clone());
        }
        let verts: Vec<usize> = bits(x).collect();
        let sub = self.host.induced_subgraph(&verts);
        let mut found = None;
        let out = search_realizations(
            &sub,
            Targets::Multiset(self.parts[i].terms().to_vec()),
            Symmetry::Isomorphic,
            &mut self.meter,
            &mut |h| {
                if h.is_connected() {
                    found = Some(h.clone());
                    Flow::Stop
                } else {
                    Flow::Continue
                }
            },
        );
        if out == Outcome::OutOfBudget {
            return None;
        }
        self.cache.insert((x, key_part), found.clone());
        Some(found)
    }
}

/// Calls `f` on every `k`-subset of `mask`, in increasing order of the
/// subsets' sorted element lists.
fn subsets(mask: u64, k: usize, f: &mut dyn FnMut(u64)) {
    fn go(rest: u64, k: usize, acc: u64, f: &mut dyn FnMut(u64)) {
        if k == 0 {
            f(acc);
            return;
        }
        if (rest.count_ones() as usize) < k {
            return;
        }
        let v = rest.trailing_zeros();
        let rest = rest & (rest - 1);
        go(rest, k - 1, acc | 1 << v, f);
        go(rest, k, acc, f);
    }
    go(mask, k, 0, f)
}
