//! The (V, N, P) tables of the tree DP on a single-attribute instance.

use cecac::lang::{combine, parse_constraint};
use cecac::solver::treedp::{build_tables_with, expand_attributes, solve_tree_dp, split_candidates};
use cecac::{Attribute, Candidate, Instance};

fn main() {
    let instance = Instance {
        name: "tree".into(),
        attributes: ["a1", "a2", "a3", "a4"].map(Attribute::from).to_vec(),
        candidates: vec![
            Candidate::new("c1", ["a1"], 3),
            Candidate::new("c2", ["a2"], 2),
            Candidate::new("c3", ["a3"], 6),
            Candidate::new("c4", ["a4"], 1),
            Candidate::new("c5", Vec::<&str>::new(), 4),
        ],
        constraints: vec![
            parse_constraint("a1 -> a2").unwrap(),
            parse_constraint("a3 -> ~a4").unwrap(),
        ],
        k: 3,
        p: 10,
    };

    let expanded = expand_attributes(&instance).unwrap();
    let split = split_candidates(&expanded);
    println!("C+ = {:?}, C- = {:?}", split.c_plus, split.c_minus);

    let tree = combine(&expanded.constraints).tree().cloned().unwrap();
    let root = build_tables_with(&expanded, &tree, instance.k, |id, table| {
        let filled = table.cells().filter(|(_, _, c)| c.value.is_finite()).count();
        println!("node {id} ({}): {filled} reachable cells", tree.formula(id));
    })
    .unwrap();

    println!("root table:");
    for (i, j, cell) in root.cells() {
        if let Some(v) = cell.value.finite() {
            println!("  V[{i}][{j}] = {v:>2}  N = {:?}  P = {:?}", cell.irreplaceable, cell.replaceable);
        }
    }

    let s = solve_tree_dp(&instance).unwrap();
    println!("best committee {:?} with profit {:?}", s.best.as_ref().map(|b| &b.committee), s.best_profit());
}
