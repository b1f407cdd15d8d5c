//! Rewriting a fan-in-4 disjunction into narrow constraints.

use cecac::lang::parse_constraint;
use cecac::reductions::{split_constraint, split_instance, SplitMode};
use cecac::solver::oracle::solve_exhaustive;
use cecac::{Attribute, Candidate, Instance};

fn main() {
    let r = parse_constraint("x1 | x2 | x3 | x4 -> x0").unwrap();
    for mode in [SplitMode::FanIn3, SplitMode::FanIn2] {
        let split = split_constraint(&r, mode).unwrap();
        println!("{mode:?}: {} constraints, fresh {:?}", split.constraints.len(), split.fresh);
        for c in &split.constraints {
            println!("  {c}");
        }
    }

    let names = ["x0", "x1", "x2", "x3", "x4"];
    let instance = Instance {
        name: "fanin".into(),
        attributes: names.map(Attribute::from).to_vec(),
        candidates: names
            .iter()
            .enumerate()
            .map(|(i, a)| Candidate::new(format!("c{i}"), [*a], i as i64))
            .collect(),
        constraints: vec![r],
        k: 2,
        p: 0,
    };
    let narrow = split_instance(&instance, SplitMode::FanIn2, true).unwrap();
    println!(
        "executable split: {} candidates, {} constraints",
        narrow.candidates.len(),
        narrow.constraints.len()
    );
    println!("original optimum: {:?}", solve_exhaustive(&instance).unwrap().best);
}
