//! The four exceptional families, and the solver confirming each is stuck.

use packlab::lab::check_main;
use packlab::pack::{pack_sequence, SearchBudget};
use packlab::recognize::*;
use packlab::Graph;

fn show(name: &str, g1: &Graph, g2: &Graph) -> packlab::Result<()> {
    let kinds = match_exceptions(g1, g2)?;
    let hyp = check_main(g1, g2)?;
    let r = pack_sequence(g1, g2, &SearchBudget::default())?;
    let kinds: Vec<String> = kinds.iter().map(ToString::to_string).collect();
    println!("{name:<6} matches [{}], hypothesis {}, sequence packing {}", kinds.join(", "), hyp.satisfied, r.status);
    Ok(())
}

fn main() -> packlab::Result<()> {
    show("F1", &build_cycle_edges(5)?.with_isolates(1), &build_disjoint_copies(2, &build_complete(3)))?;
    // Δ1 = 2, Δ2 = 1: K3 plus an isolated vertex against two disjoint edges.
    show("F2", &build_complete(3).with_isolates(1), &build_disjoint_copies(2, &build_complete(2)))?;
    show("F3", &build_disjoint_copies(3, &build_complete(2)), &build_complete_bipartite(3, 3))?;
    show("F4", &build_disjoint_copies(2, &build_complete(2)), &build_complete(3).with_isolates(1))?;
    show("other", &build_path_edges(3), &build_path_edges(3))?;
    Ok(())
}
