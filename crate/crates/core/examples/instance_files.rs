//! Reading and writing instance and solution files.

use cecac::io::{instance_to_json, parse_instance, SolutionFile};
use cecac::reductions::{independent_set_to_cecac, Graph};
use cecac::solver::{solve, SolveOptions, SolverChoice};

fn main() {
    let instance = independent_set_to_cecac(&Graph::cycle(4), 2).unwrap();
    let text = instance_to_json(&instance);
    println!("{text}");
    assert_eq!(parse_instance(&text, true).unwrap(), instance);

    let with_extra = text.replacen('{', "{\n  \"comment\": \"hand edited\",", 1);
    match parse_instance(&with_extra, true) {
        Ok(_) => println!("strict mode accepted an unknown field"),
        Err(e) => println!("strict: {e}"),
    }
    println!("lenient accepted: {}", parse_instance(&with_extra, false).is_ok());

    let s = solve(&instance, SolverChoice::Auto, &SolveOptions::default()).unwrap();
    print!("{}", SolutionFile::from_solution(&s, 0.0).to_json());
}
