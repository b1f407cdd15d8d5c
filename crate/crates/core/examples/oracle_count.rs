//! Exhaustive enumeration: count feasible committees and respect the budget.

use cecac::reductions::{random_instance, GeneratorParams};
use cecac::solver::oracle::{binomial, enumerate_feasible, solve_exhaustive_with, OracleConfig};

fn main() {
    let instance = random_instance(&GeneratorParams::general(12, 5, 3, 4, 2, 11)).unwrap();
    for r in &instance.constraints {
        println!("{r}");
    }
    let e = enumerate_feasible(&instance).unwrap();
    println!(
        "{} of {} committees satisfy the constraints; best profit {:?} (p = {})",
        e.count,
        binomial(instance.candidates.len(), instance.k),
        e.max_profit,
        instance.p
    );

    let tight = OracleConfig { budget: 100 };
    match solve_exhaustive_with(&instance, &tight) {
        Ok(s) => println!("solved within budget: {s:?}"),
        Err(e) => println!("refused: {e}"),
    }
}
