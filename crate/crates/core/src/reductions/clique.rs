//! Clique on D-regular graphs to CECAC, in two variants.

use super::{Graph, ReductionError};
use crate::lang::parse_constraint;
use crate::model::{Attribute, Candidate, Instance};

fn check_k_prime(k_prime: usize) -> Result<(), ReductionError> {
    if k_prime < 2 {
        return Err(ReductionError::InconsistentParams(format!("k' must be at least 2, got {k_prime}")));
    }
    Ok(())
}

fn check_size(k: usize, m: usize) -> Result<(), ReductionError> {
    if k > m {
        return Err(ReductionError::InconsistentParams(format!(
            "committee size {k} exceeds the {m} generated candidates"
        )));
    }
    Ok(())
}

/// Slot `h` (1-based) of edge `e` among the edges incident to `v`.
fn slot(g: &Graph, v: usize, e: usize) -> usize {
    g.incident(v).iter().position(|&x| x == e).unwrap() + 1
}

/// Every candidate gets at most two attributes and every attribute occurs at
/// most once in the constraints.
///
/// Edge `e_j = {u, v}` (`u < v`) gives attributes `x1_j..x4_j` and the edge
/// candidate `e_j<x1_j, x2_j>` with profit `k'+1`. Vertex `v_i` gives
/// `y0_i..yD_i`, `z0_i..zD_i`, incidence candidates `c{h}_i<x3_j|x4_j, y{h}_i>`
/// (profit 0; `u` takes `x3_j`, `v` takes `x4_j`), `d{h}_i<z{h}_i, y0_i>`
/// (profit 0) and the vertex candidate `g_i<z0_i>` (profit -1).
pub fn clique_to_cecac_two_attrs(g: &Graph, k_prime: usize) -> Result<Instance, ReductionError> {
    check_k_prime(k_prime)?;
    let d = g.regular_degree()?;
    let n = g.vertex_count();
    let kp = k_prime as i64;
    let mut attributes: Vec<Attribute> = Vec::new();
    let mut candidates = Vec::new();
    let mut constraints = Vec::new();

    for (j, _) in g.edges().iter().enumerate() {
        for x in 1..=4 {
            attributes.push(format!("x{x}_{j}").into());
        }
        candidates.push(Candidate::new(format!("e_{j}"), [format!("x1_{j}"), format!("x2_{j}")], kp + 1));
        constraints.push(format!("x1_{j} -> x3_{j}"));
        constraints.push(format!("x2_{j} -> x4_{j}"));
    }
    for i in 0..n {
        for h in 0..=d {
            attributes.push(format!("y{h}_{i}").into());
            attributes.push(format!("z{h}_{i}").into());
            constraints.push(format!("y{h}_{i} -> z{h}_{i}"));
        }
    }
    for i in 0..n {
        for e in g.incident(i) {
            let h = slot(g, i, e);
            let x = if g.edges()[e].0 == i { 3 } else { 4 };
            candidates.push(Candidate::new(format!("c{h}_{i}"), [format!("x{x}_{e}"), format!("y{h}_{i}")], 0));
        }
        for h in 1..=d {
            candidates.push(Candidate::new(format!("d{h}_{i}"), [format!("z{h}_{i}"), format!("y0_{i}")], 0));
        }
        candidates.push(Candidate::new(format!("g_{i}"), [format!("z0_{i}")], -1));
    }

    let k = 5 * k_prime * (k_prime - 1) / 2 + k_prime;
    check_size(k, candidates.len())?;
    Ok(Instance {
        name: format!("clique2-k{k_prime}"),
        attributes,
        candidates,
        constraints: constraints.iter().map(|c| parse_constraint(c).unwrap()).collect(),
        k,
        p: kp * (kp - 1) * (kp + 1) / 2 - kp,
    })
}

/// Every candidate gets one attribute and every attribute occurs at most
/// twice in the constraints.
///
/// Edge `e_j = {v_i, v_i'}` gives `y_j` and candidate `e_j<y_j>` (profit 1)
/// with `y_j -> x{h1}_i`, `y_j -> x{h2}_i'` where `h1`, `h2` are the edge's
/// slots at its endpoints. Vertex `v_i` gives `c{h}_i<x{h}_i>` for
/// `h = 1..D` (profit 0), `c0_i<x0_i>` (profit -1) and
/// `x1_i | ... | xD_i -> x0_i`.
pub fn clique_to_cecac_single_attr(g: &Graph, k_prime: usize) -> Result<Instance, ReductionError> {
    check_k_prime(k_prime)?;
    let d = g.regular_degree()?;
    let n = g.vertex_count();
    let mut attributes: Vec<Attribute> = Vec::new();
    let mut candidates = Vec::new();
    let mut constraints = Vec::new();

    for (j, &(u, v)) in g.edges().iter().enumerate() {
        attributes.push(format!("y_{j}").into());
        candidates.push(Candidate::new(format!("e_{j}"), [format!("y_{j}")], 1));
        constraints.push(format!("y_{j} -> x{}_{u}", slot(g, u, j)));
        constraints.push(format!("y_{j} -> x{}_{v}", slot(g, v, j)));
    }
    for i in 0..n {
        for h in 0..=d {
            attributes.push(format!("x{h}_{i}").into());
            candidates.push(Candidate::new(format!("c{h}_{i}"), [format!("x{h}_{i}")], if h == 0 { -1 } else { 0 }));
        }
        if d > 0 {
            let lhs: Vec<String> = (1..=d).map(|h| format!("x{h}_{i}")).collect();
            constraints.push(format!("{} -> x0_{i}", lhs.join(" | ")));
        }
    }

    let k = 3 * k_prime * (k_prime - 1) / 2 + k_prime;
    check_size(k, candidates.len())?;
    let kp = k_prime as i64;
    Ok(Instance {
        name: format!("clique1-k{k_prime}"),
        attributes,
        candidates,
        constraints: constraints.iter().map(|c| parse_constraint(c).unwrap()).collect(),
        k,
        p: kp * (kp - 1) / 2 - kp,
    })
}
