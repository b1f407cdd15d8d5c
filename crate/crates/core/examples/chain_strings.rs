//! Clusters, implication strings and the string graph of simple constraints.

use cecac::lang::{normalize_simple, parse_constraint};
use cecac::solver::chaindp::{build_strings_graph, cluster_constraints, solve_chain_dp, string_prefix_table};
use cecac::{Attribute, Candidate, Instance};

fn main() {
    let texts = ["a1 -> a2", "a2 -> a3", "a4 -> ~a3", "a5 -> a6 & a7", "a8 -> ~a8"];
    let constraints: Vec<_> = texts.iter().map(|t| parse_constraint(t).unwrap()).collect();
    let simple = normalize_simple(&constraints).unwrap();
    println!("normalized: {}", simple.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));

    let attributes: Vec<Attribute> = (1..=8).map(|i| Attribute::from(format!("a{i}"))).collect();
    let instance = Instance {
        name: "chains".into(),
        candidates: attributes
            .iter()
            .enumerate()
            .map(|(i, a)| Candidate::new(format!("c{}", i + 1), [a.clone()], (i as i64 * 7) % 5 + 1))
            .collect(),
        attributes,
        constraints,
        k: 4,
        p: 12,
    };

    for (n, cluster) in cluster_constraints(&simple).iter().enumerate() {
        let graph = build_strings_graph(cluster).unwrap();
        println!("cluster {n}:");
        for (s, string) in graph.strings.iter().enumerate() {
            println!("  string {s} on vertex {}: {string}", graph.vertex_of(s));
            let table = string_prefix_table(string, &instance, instance.k);
            let best: Vec<String> = (0..=table.t())
                .map(|j| match table.value(1, j).finite() {
                    Some(v) => v.to_string(),
                    None => "-".into(),
                })
                .collect();
            println!("    one member, prefix 0..={}: {}", table.t(), best.join(" "));
        }
        println!("  edges: {:?}", graph.edges);
    }

    let s = solve_chain_dp(&instance).unwrap();
    println!("feasible {} with {:?}", s.feasible, s.best);
}
