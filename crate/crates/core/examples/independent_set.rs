//! Independent set as a single-constraint election.

use cecac::reductions::{independent_set_to_cecac, Graph};
use cecac::solver::{solve, SolveOptions, SolverChoice};

fn main() {
    let graphs = [
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("C5", Graph::cycle(5)),
        ("Petersen", Graph::petersen()),
    ];
    for (name, g) in graphs {
        for k in 2..=g.vertex_count().min(4) {
            let inst = independent_set_to_cecac(&g, k).unwrap();
            let s = solve(&inst, SolverChoice::Auto, &SolveOptions::default()).unwrap();
            let found = s.committee.map(|c| c.join(" ")).unwrap_or_else(|| "none".into());
            println!("{name:<8} k'={k}: {found}");
        }
    }
    let inst = independent_set_to_cecac(&Graph::path(3), 2).unwrap();
    println!("constraint for P3: {}", inst.constraints[0]);
}
