//! Build a small election, solve it and check the committee.

use cecac::lang::parse_constraint;
use cecac::model::check_solution;
use cecac::solver::{solve, SolveOptions, SolverChoice};
use cecac::{Attribute, Candidate, Instance};

fn main() {
    let instance = Instance {
        name: "quickstart".into(),
        attributes: ["a1", "a2", "a3"].map(Attribute::from).to_vec(),
        candidates: vec![
            Candidate::new("c1", ["a1"], 3),
            Candidate::new("c2", ["a2"], 2),
            Candidate::new("c3", ["a3"], 5),
            Candidate::new("c4", Vec::<&str>::new(), 4),
        ],
        constraints: vec![
            parse_constraint("a1 -> a2").unwrap(),
            parse_constraint("a3 -> ~a2").unwrap(),
        ],
        k: 2,
        p: 8,
    };

    let solution = solve(&instance, SolverChoice::Auto, &SolveOptions::default()).unwrap();
    println!("solver:    {}", solution.solver);
    println!("feasible:  {}", solution.feasible);
    println!("committee: {:?}", solution.committee.as_deref().unwrap_or_default());
    println!("profit:    {:?}", solution.profit);

    let verdict = check_solution(&instance, &["c1", "c3"]).unwrap();
    for &i in &verdict.violated {
        println!("{{c1, c3}} violates {}", instance.constraints[i]);
    }
}
