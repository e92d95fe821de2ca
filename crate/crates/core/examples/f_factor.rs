//! Prescribed-degree spanning subgraphs, found by backtracking.

use packlab::pack::find_f_factor;
use packlab::recognize::{build_complete, build_cycle_edges};

fn main() {
    let k5 = build_complete(5);
    for f in [vec![2; 5], vec![4, 2, 2, 2, 2], vec![1; 5], vec![3, 3, 2, 2, 2]] {
        match find_f_factor(&k5, &f) {
            Ok(h) => println!("K5 with degrees {f:?}: {:?}", h.edges().collect::<Vec<_>>()),
            Err(e) => println!("K5 with degrees {f:?}: {e}"),
        }
    }
    let c6 = build_cycle_edges(6).unwrap();
    println!("perfect matching of C6: {:?}", find_f_factor(&c6, &[1; 6]).map(|m| m.edges().collect::<Vec<_>>()));
}
