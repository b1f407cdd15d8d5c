use super::{Graph, ReductionError};
use crate::lang::{Constraint, Formula};
use crate::model::{Attribute, Candidate, Instance};

/// Independent set to CECAC with a single constraint.
///
/// Vertex `v_i` becomes candidate `v_i<a_i>` with profit 1, and the one
/// constraint is `a_0 | ... | a_{n-1} -> (~a_r | ~a_s) & ...` over all edges
/// `{v_r, v_s}`; `k = p = k'`. An edgeless graph gets no constraint at all,
/// since its right-hand side would be the empty conjunction.
pub fn independent_set_to_cecac(g: &Graph, k_prime: usize) -> Result<Instance, ReductionError> {
    let n = g.vertex_count();
    if k_prime > n {
        return Err(ReductionError::InconsistentParams(format!(
            "k' = {k_prime} exceeds the {n} vertices"
        )));
    }
    let attr = |i: usize| Attribute::from(format!("a_{i}"));
    let lhs = Formula::disjunction((0..n).map(|i| Formula::atom(attr(i))));
    let rhs = Formula::conjunction(
        g.edges()
            .iter()
            .map(|&(r, s)| Formula::or(Formula::neg_atom(attr(r)), Formula::neg_atom(attr(s)))),
    );
    let constraints = match (lhs, rhs) {
        (Some(lhs), Some(rhs)) => vec![Constraint::new(lhs, rhs)],
        _ => Vec::new(),
    };
    Ok(Instance {
        name: format!("indset-k{k_prime}"),
        attributes: (0..n).map(attr).collect(),
        candidates: (0..n).map(|i| Candidate::new(format!("v_{i}"), [attr(i)], 1)).collect(),
        constraints,
        k: k_prime,
        p: k_prime as i64,
    })
}
