//! The three packing notions on one pair of graphs.
//!
//!     cargo run --example pack_modes -- <g1 graph6> <g2 graph6>

use packlab::graph::graph6_decode;
use packlab::pack::{pack, witness_satisfies, Mode, SearchBudget};
use packlab::recognize::{build_complete, build_cycle_edges, build_disjoint_copies};

fn main() -> packlab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (g1, g2) = if args.len() == 2 {
        (graph6_decode(&args[0])?, graph6_decode(&args[1])?)
    } else {
        (build_cycle_edges(6)?, build_disjoint_copies(2, &build_complete(3)))
    };
    println!("g1 = {g1}, g2 = {g2}");
    let budget = SearchBudget::default();
    for mode in [Mode::Embed, Mode::Sequence, Mode::ComponentWise] {
        let r = pack(&g1, &g2, mode, &budget)?;
        print!("{:<14} {:<16} nodes {:>6}", mode.to_string(), r.status.to_string(), r.stats.nodes);
        if let Some(w) = &r.witness {
            assert!(witness_satisfies(&g1, &g2, mode, w));
            print!("  witness {w}");
        }
        println!();
    }
    Ok(())
}
