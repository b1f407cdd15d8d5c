//! Parse constraints, rewrite them to NNF and combine them into one tree.

use cecac::lang::{combine, parse_constraint, parse_formula, NodeKind};

fn main() {
    let f = parse_formula("~(a | b & ~c)").unwrap();
    println!("parsed:    {f}");
    println!("nnf:       {}", f.to_nnf());
    println!("literals:  {}", f.literal_count());

    let constraints: Vec<_> = ["a1 -> a2", "a3 -> a4 | a5", "~a6 -> a7"]
        .iter()
        .map(|t| parse_constraint(t).unwrap())
        .collect();
    for r in &constraints {
        println!("{r:<16} as clause {}", r.to_nnf_formula());
    }

    let combined = combine(&constraints);
    println!("combined:  {}", combined.formula().unwrap());
    let tree = combined.tree().unwrap();
    for (id, node) in tree.nodes() {
        let kind = match node {
            NodeKind::Leaf(l) => format!("leaf {l}"),
            NodeKind::And(a, b) => format!("and({a}, {b})"),
            NodeKind::Or(a, b) => format!("or({a}, {b})"),
        };
        println!("  node {id:>2}: {kind}");
    }
}
