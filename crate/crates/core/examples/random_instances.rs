//! Seeded random instances per solver class, checked by the classifier.

use cecac::model::classify_instance;
use cecac::reductions::{random_instance, GeneratorParams};

fn main() {
    let settings = [
        ("tree", GeneratorParams::tree_dp(8, 4, 2, 3, 42)),
        ("chain", GeneratorParams::chain_dp(8, 4, 3, 3, 7)),
        ("general", GeneratorParams::general(8, 4, 2, 3, 2, 1)),
    ];
    for (name, params) in settings {
        let inst = random_instance(&params).unwrap();
        let class = classify_instance(&inst);
        println!("{name}: recommended {} {:?}", class.recommended, class.descriptor);
        for r in &inst.constraints {
            println!("  {r}");
        }
        assert_eq!(inst, random_instance(&params).unwrap());
    }
}
