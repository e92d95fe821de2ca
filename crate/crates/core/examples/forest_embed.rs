//! Embedding a forest into a graph of large minimum degree.

use packlab::lab::check_forest_embed;
use packlab::pack::forest_embed;
use packlab::recognize::{build_complete_bipartite, build_path_edges, build_star};

fn main() -> packlab::Result<()> {
    // Minimum degree 4, so any forest with at most 4 edges fits.
    let host = build_complete_bipartite(4, 5);
    for forest in [build_path_edges(4).with_isolates(2), build_star(3).disjoint_union(&build_path_edges(1)), build_path_edges(7)] {
        let report = check_forest_embed(&forest, &host);
        println!("forest {forest} into {host}: condition {}", report.satisfied);
        match forest_embed(&forest, &host) {
            Ok(map) => {
                assert!(forest.edges().all(|(u, v)| host.has_edge(map[u], map[v])));
                println!("  map {map:?}");
            }
            Err(e) => println!("  {e}"),
        }
    }
    Ok(())
}
