#![allow(dead_code)]

use cecac::lang::parse_constraint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use cecac::reductions::{GeneratorParams, Graph, UNBOUNDED};
use cecac::{Attribute, Candidate, Instance};

pub fn instance(attrs: &[&str], cands: &[(&str, &[&str], i64)], constraints: &[&str], k: usize, p: i64) -> Instance {
    Instance {
        name: String::new(),
        attributes: attrs.iter().map(|a| Attribute::from(*a)).collect(),
        candidates: cands.iter().map(|(id, at, s)| Candidate::new(*id, at.iter().copied(), *s)).collect(),
        constraints: constraints.iter().map(|c| parse_constraint(c).unwrap()).collect(),
        k,
        p,
    }
}

/// One owner `c_<attr>` per attribute with the given profits, plus `free`
/// unconstrained candidates.
pub fn one_owner_each(attrs: &[&str], profits: &[i64], free: &[i64], constraints: &[&str], k: usize) -> Instance {
    let mut candidates: Vec<Candidate> = attrs
        .iter()
        .zip(profits)
        .map(|(a, s)| Candidate::new(format!("c_{a}"), [*a], *s))
        .collect();
    for (i, s) in free.iter().enumerate() {
        candidates.push(Candidate::new(format!("f{i}"), Vec::<&str>::new(), *s));
    }
    Instance {
        name: String::new(),
        attributes: attrs.iter().map(|a| Attribute::from(*a)).collect(),
        candidates,
        constraints: constraints.iter().map(|c| parse_constraint(c).unwrap()).collect(),
        k,
        p: 0,
    }
}

pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

pub fn has_clique(g: &Graph, size: usize) -> bool {
    subsets(g.vertex_count(), size)
        .iter()
        .any(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v))))
}

pub fn has_independent_set(g: &Graph, size: usize) -> bool {
    subsets(g.vertex_count(), size)
        .iter()
        .any(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v))))
}

pub fn corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K3", Graph::complete(3)),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
        ("C6", Graph::cycle(6)),
        ("P3", Graph::path(3)),
        ("K4", Graph::complete(4)),
        ("Petersen", Graph::petersen()),
    ]
}

/// Random small-instance parameters: `class` 0 is tree dp, 1 chain dp and
/// anything else multi-attribute with at most six attributes.
pub fn small_params(rng: &mut ChaCha8Rng, class: usize, seed: u64) -> GeneratorParams {
    let m = rng.gen_range(1..=12);
    let k = rng.gen_range(0..=m.min(6));
    let d = rng.gen_range(0..=4);
    match class {
        0 => GeneratorParams::tree_dp(m, rng.gen_range((2 * d).max(1)..=12), d, k, seed),
        1 => GeneratorParams::chain_dp(m, rng.gen_range(d.max(1)..=12), d, k, seed),
        _ => GeneratorParams {
            max_attr_occurrence: UNBOUNDED,
            ..GeneratorParams::general(m, rng.gen_range(1..=6), d, k, rng.gen_range(1..=3), seed)
        },
    }
}
