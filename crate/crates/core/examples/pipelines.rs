//! Constructive routes that follow the shape of the proofs.

use packlab::lab::decompose::tree_split;
use packlab::lab::{check_lemma9, pipeline_lemma9, pipeline_theorem12};
use packlab::pack::{witness_satisfies, SearchBudget};
use packlab::recognize::{build_complete, build_path_edges, build_star};

fn main() -> packlab::Result<()> {
    let budget = SearchBudget::default();
    // A triangle core with a path and an edge hanging off as the forest.
    let g1 = build_complete(3).disjoint_union(&build_path_edges(2)).disjoint_union(&build_path_edges(1)).with_isolates(1);
    let g2 = build_star(2).with_isolates(6);
    let d = tree_split(&g1);
    println!("core {:?}, forest {:?}", d.core, d.forest);
    println!("lemma premise satisfied: {}", check_lemma9(&g1, &g2, &budget)?.satisfied);
    for (name, out) in [("lemma9", pipeline_lemma9(&g1, &g2, &budget)?), ("thm12", pipeline_theorem12(&g1, &g2, &budget)?)] {
        let w = out.result.witness.as_ref().expect("packs");
        assert!(witness_satisfies(&g1, &g2, out.result.mode, w));
        println!("{name}: {} via {:?}, anomaly {:?}", out.result.status, out.route, out.anomaly);
        for s in &out.steps {
            println!("  {s}");
        }
    }
    Ok(())
}
