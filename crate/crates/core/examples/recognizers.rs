//! Split graphs, dominating cliques and unigraphs.
//!
//!     cargo run --example recognizers -- <graph6>

use packlab::graph::graph6_decode;
use packlab::recognize::*;
use packlab::Graph;

fn describe(g: &Graph) -> packlab::Result<()> {
    print!("{g:<10} unigraph {:<5}", is_unigraph(g)?);
    match is_split(g) {
        Some(w) => print!(" split K={:?} I={:?}", w.clique, w.independent),
        None => print!(" not split"),
    }
    match has_dominating_clique(g) {
        Some(w) => println!(", dominated by {w:?}"),
        None => println!(", no dominating clique"),
    }
    Ok(())
}

fn main() -> packlab::Result<()> {
    if let Some(arg) = std::env::args().nth(1) {
        return describe(&graph6_decode(&arg)?);
    }
    describe(&build_star(4))?;
    describe(&build_cycle_edges(4)?)?;
    describe(&build_path_edges(3))?;
    describe(&build_u2(2, 1)?)?;
    describe(&build_u3(2))?;
    Ok(())
}
