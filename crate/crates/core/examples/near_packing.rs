//! A near-packing with few bad pairs, then local repair by exchanges.

use packlab::graph::bad_pairs;
use packlab::pack::{exchange_repair, near_packing, pack_sequence, SearchBudget};
use packlab::recognize::{build_cycle_edges, build_star};

fn main() -> packlab::Result<()> {
    let g1 = build_cycle_edges(7)?;
    let g2 = build_star(3).with_isolates(3);
    let budget = SearchBudget::default();
    let Some(np) = near_packing(&g1, &g2, &budget)? else {
        println!("the reduced sequence does not pack");
        return Ok(());
    };
    println!("near-packing {} anchored at {}, bad pairs {:?}", np.realization, np.anchor, bad_pairs(&np.realization, &g2)?);
    let repaired = exchange_repair(&np, &g2, &budget);
    println!("repair: {}", repaired.status);
    if let Some(w) = &repaired.witness {
        println!("  witness {w}, bad pairs {}", bad_pairs(w, &g2)?.len());
    }
    println!("exact solver: {}", pack_sequence(&g1, &g2, &budget)?.status);
    Ok(())
}
