//! Degree sequences: graphicality, Havel-Hakimi, and anchored realizations.
//!
//!     cargo run --example realize -- 3,3,2,2,1,1

use packlab::graph::{anchored_realize, havel_hakimi_realize, DegreeSequence};

fn main() -> packlab::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,3,2,2,1,1".into());
    let seq: DegreeSequence = arg.parse()?;
    println!("sequence {seq}, graphical: {}", seq.is_graphical());
    if !seq.is_graphical() {
        return Ok(());
    }
    let g = havel_hakimi_realize(&seq)?;
    println!("havel-hakimi: {g}");
    for (u, v) in g.edges() {
        println!("  {u} - {v}");
    }
    if let Some(d) = seq.min_positive() {
        let (h, y) = anchored_realize(&seq, d)?;
        let nbrs: Vec<usize> = h.neighbors(y).collect();
        println!("anchored at {y} (degree {d}) with neighbors {nbrs:?}: {h}");
    }
    Ok(())
}
