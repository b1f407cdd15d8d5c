//! Clique reductions on regular graphs, decided by the oracle.

use cecac::reductions::{clique_to_cecac_single_attr, clique_to_cecac_two_attrs, Graph};
use cecac::solver::oracle::solve_exhaustive;

fn main() {
    for (name, g) in [("K3", Graph::complete(3)), ("C4", Graph::cycle(4))] {
        let one = clique_to_cecac_single_attr(&g, 3).unwrap();
        let two = clique_to_cecac_two_attrs(&g, 3).unwrap();
        println!(
            "{name}: single-attr has {} candidates, k = {}, p = {}; two-attrs has {} candidates, k = {}, p = {}",
            one.candidates.len(),
            one.k,
            one.p,
            two.candidates.len(),
            two.k,
            two.p
        );
        let s = solve_exhaustive(&one).unwrap();
        println!("  triangle present: {}", s.feasible);
    }

    let path = Graph::path(3);
    match clique_to_cecac_single_attr(&path, 2) {
        Ok(_) => println!("P3 accepted"),
        Err(e) => println!("P3 rejected: {e}"),
    }
}
