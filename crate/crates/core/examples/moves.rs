//! Edge exchanges and vertex interchanges keep the degree sequence.

use packlab::graph::{bad_pairs, edge_exchange, vertex_interchange, DegreeSequence, EdgeExchangeSpec};
use packlab::recognize::{build_complete, build_path_edges};

fn main() -> packlab::Result<()> {
    // Path 0-1-2-3: trade edges 1-0 and 2-3 for 1-3 and 2-0.
    let p = build_path_edges(3);
    let spec = EdgeExchangeSpec::new(0, 3, 2, 1);
    let q = edge_exchange(&p, spec)?;
    println!("{:?} -> {:?}", p.edges().collect::<Vec<_>>(), q.edges().collect::<Vec<_>>());
    assert_eq!(DegreeSequence::of(&p), DegreeSequence::of(&q));

    match edge_exchange(&p, EdgeExchangeSpec::new(0, 1, 2, 3)) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("rejected: {e}"),
    }

    let swapped = vertex_interchange(&p, 0, 1)?;
    println!("interchange 0 and 1: {:?}", swapped.edges().collect::<Vec<_>>());

    let k3 = build_complete(3).with_isolates(1);
    println!("bad pairs with K3: {:?}", bad_pairs(&p, &k3)?);
    Ok(())
}
