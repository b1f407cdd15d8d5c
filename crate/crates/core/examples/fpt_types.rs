//! Enumeration over attribute types for multi-attribute candidates.

use cecac::lang::parse_constraint;
use cecac::solver::fpt::{candidate_types, solve_fpt_detailed, FptConfig};
use cecac::{Attribute, Candidate, Instance};

fn main() {
    let instance = Instance {
        name: "types".into(),
        attributes: ["senior", "junior", "local", "remote"].map(Attribute::from).to_vec(),
        candidates: vec![
            Candidate::new("ana", ["senior", "local"], 9),
            Candidate::new("bo", ["senior", "remote"], 8),
            Candidate::new("cy", ["junior", "local"], 4),
            Candidate::new("di", ["junior", "local"], 5),
            Candidate::new("ed", ["junior", "remote"], 3),
            Candidate::new("fay", ["senior", "local"], 6),
        ],
        constraints: vec![
            parse_constraint("senior -> junior").unwrap(),
            parse_constraint("remote -> ~senior | local").unwrap(),
        ],
        k: 3,
        p: 18,
    };

    for (t, ids) in candidate_types(&instance) {
        println!("{t:<18} {ids:?}");
    }
    let outcome = solve_fpt_detailed(&instance, &FptConfig::default()).unwrap();
    println!("admissible type sets: {}", outcome.admissible_sets);
    if let Some(types) = &outcome.winning_types {
        let names: Vec<String> = types.iter().map(ToString::to_string).collect();
        println!("winning types: {}", names.join(" "));
    }
    println!("{:?}", outcome.solution.best);
}
