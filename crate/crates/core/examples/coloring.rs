//! Equitable colorings from packings with disjoint cliques.

use packlab::lab::equitable_coloring_via_packing;
use packlab::recognize::{build_complete_bipartite, build_cycle_edges, build_star};

fn main() -> packlab::Result<()> {
    for g in [build_cycle_edges(7)?, build_complete_bipartite(3, 3), build_star(5)] {
        let k = g.max_degree();
        let col = equitable_coloring_via_packing(&g, k)?;
        assert!(col.is_valid_for(&g));
        println!("{g}: Δ = {k}, classes {:?}", col.classes);
    }
    Ok(())
}
