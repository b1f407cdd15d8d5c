//! Seeded random instances shaped for a given solver class.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ReductionError;
use crate::lang::{Constraint, Formula, Literal};
use crate::model::{Attribute, Candidate, Instance};

/// Marks a cap as absent.
pub const UNBOUNDED: usize = usize::MAX;

/// Longest formula the generator builds when the length cap is absent.
const MAX_GENERATED_LENGTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    /// Candidates.
    pub m: usize,
    /// Attributes.
    pub l: usize,
    /// Constraints.
    pub d: usize,
    pub k: usize,
    pub max_attrs_per_candidate: usize,
    /// Constraints an attribute may appear in.
    pub max_attr_occurrence: usize,
    /// Distinct attributes per constraint.
    pub max_constraint_length: usize,
    pub profit_min: i64,
    pub profit_max: i64,
    /// Chance in percent that a constraint attribute is drawn from the
    /// attributes no candidate owns, while owned ones are left.
    pub unowned_percent: u8,
    pub seed: u64,
}

impl GeneratorParams {
    /// Caps `(1, 1, unbounded)`: single-attribute candidates, every attribute
    /// in at most one constraint.
    pub fn tree_dp(m: usize, l: usize, d: usize, k: usize, seed: u64) -> Self {
        GeneratorParams {
            m,
            l,
            d,
            k,
            max_attrs_per_candidate: 1,
            max_attr_occurrence: 1,
            max_constraint_length: UNBOUNDED,
            profit_min: -3,
            profit_max: 10,
            unowned_percent: 10,
            seed,
        }
    }

    /// Caps `(1, 2, 2)`: literal to literal constraints, every attribute in
    /// at most two of them.
    pub fn chain_dp(m: usize, l: usize, d: usize, k: usize, seed: u64) -> Self {
        GeneratorParams {
            max_attr_occurrence: 2,
            max_constraint_length: 2,
            ..Self::tree_dp(m, l, d, k, seed)
        }
    }

    /// No structural caps beyond `max_attrs` attributes per candidate.
    pub fn general(m: usize, l: usize, d: usize, k: usize, max_attrs: usize, seed: u64) -> Self {
        GeneratorParams {
            max_attrs_per_candidate: max_attrs,
            max_attr_occurrence: UNBOUNDED,
            ..Self::tree_dp(m, l, d, k, seed)
        }
    }
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams::general(8, 4, 2, 3, 2, 0)
    }
}

/// A random instance within the caps of `params`; the same params always
/// give the same instance.
///
/// Profits are uniform in the profit range and `p` is the unconstrained
/// top-k sum lowered by a random amount, so feasible and infeasible
/// outcomes both occur.
pub fn random_instance(params: &GeneratorParams) -> Result<Instance, ReductionError> {
    let GeneratorParams { m, l, d, k, .. } = *params;
    let bad = |msg: String| Err(ReductionError::InconsistentParams(msg));
    if k > m {
        return bad(format!("k = {k} exceeds m = {m}"));
    }
    if params.profit_min > params.profit_max {
        return bad(format!("empty profit range {}..={}", params.profit_min, params.profit_max));
    }
    if d > 0 && (l == 0 || params.max_attr_occurrence == 0 || params.max_constraint_length == 0) {
        return bad("constraints requested but no attribute may appear in one".into());
    }
    let min_len = params.max_constraint_length.min(2).min(l);
    if params.max_attr_occurrence.saturating_mul(l) < min_len.saturating_mul(d) {
        return bad(format!(
            "{d} constraints need {} attribute slots, only {} available",
            min_len * d,
            params.max_attr_occurrence.saturating_mul(l)
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let attributes: Vec<Attribute> = (1..=l).map(|i| Attribute::from(format!("a{i}"))).collect();

    let per_candidate = params.max_attrs_per_candidate.min(l);
    let mut deck = Deck { cards: Vec::new(), l };
    let candidates: Vec<Candidate> = (1..=m)
        .map(|i| {
            let count = if per_candidate == 0 || rng.gen_bool(0.15) {
                0
            } else {
                rng.gen_range(1..=per_candidate)
            };
            let owned: Vec<Attribute> = deck.deal(&mut rng, count).into_iter().map(|a| attributes[a].clone()).collect();
            let profit = rng.gen_range(params.profit_min..=params.profit_max);
            Candidate::new(format!("c{i}"), owned, profit)
        })
        .collect();

    let mut owned = vec![false; l];
    for c in &candidates {
        for a in &c.attributes {
            owned[attributes.iter().position(|x| x == a).unwrap()] = true;
        }
    }
    let mut budget = vec![params.max_attr_occurrence; l];
    let mut constraints = Vec::with_capacity(d);
    for made in 0..d {
        let open: Vec<usize> = (0..l).filter(|&a| budget[a] > 0).collect();
        let slots_left: usize = budget.iter().map(|&b| b.min(d)).sum();
        // keep enough slots for the constraints still to come
        let spare = slots_left.saturating_sub(min_len * (d - made - 1));
        let cap = params
            .max_constraint_length
            .min(MAX_GENERATED_LENGTH)
            .min(open.len())
            .min(spare);
        if cap == 0 {
            return bad(format!("ran out of attributes after {made} constraints"));
        }
        let len = if cap <= 2 { cap } else { rng.gen_range(2..=cap) };
        let chosen = pick_attributes(&mut rng, &open, &owned, len, params.unowned_percent);
        for &a in &chosen {
            budget[a] -= 1;
        }
        let lits: Vec<Literal> = chosen
            .iter()
            .map(|&a| {
                let name = attributes[a].clone();
                if rng.gen_bool(0.3) {
                    Literal::neg(name)
                } else {
                    Literal::pos(name)
                }
            })
            .collect();
        constraints.push(random_constraint(&mut rng, lits));
    }

    let mut profits: Vec<i64> = candidates.iter().map(|c| c.profit).collect();
    profits.sort_unstable_by(|a, b| b.cmp(a));
    let top: i64 = profits[..k].iter().sum();
    let spread = (params.profit_max - params.profit_min).max(1) * (k.max(1) as i64) / 2;
    let p = top - rng.gen_range(0..=spread);

    Ok(Instance {
        name: format!("random-{}", params.seed),
        attributes,
        candidates,
        constraints,
        k,
        p,
    })
}

/// Attributes handed out in shuffled rounds, so owners spread over all
/// attributes before any attribute gets a second one.
struct Deck {
    cards: Vec<usize>,
    l: usize,
}

impl Deck {
    fn deal(&mut self, rng: &mut ChaCha8Rng, count: usize) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::with_capacity(count);
        while out.len() < count {
            if self.cards.is_empty() {
                self.cards = (0..self.l).collect();
                self.cards.shuffle(rng);
            }
            let a = self.cards.pop().unwrap();
            if !out.contains(&a) {
                out.push(a);
            }
        }
        out
    }
}

/// `len` distinct attributes from `open`, unowned ones with the given
/// chance while owned ones are left.
fn pick_attributes(rng: &mut ChaCha8Rng, open: &[usize], owned: &[bool], len: usize, unowned_percent: u8) -> Vec<usize> {
    let (mut with, mut without): (Vec<usize>, Vec<usize>) = open.iter().partition(|&&a| owned[a]);
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let from_owned = !with.is_empty() && (without.is_empty() || rng.gen_range(0..100) >= u32::from(unowned_percent));
        let pool = if from_owned { &mut with } else { &mut without };
        out.push(pool.swap_remove(rng.gen_range(0..pool.len())));
    }
    out
}

fn random_constraint(rng: &mut ChaCha8Rng, mut lits: Vec<Literal>) -> Constraint {
    if lits.len() == 1 {
        // a single attribute can only constrain itself
        let a = lits.pop().unwrap();
        return Constraint::new(Formula::atom(a.attribute.clone()), Formula::neg_atom(a.attribute));
    }
    let cut = rng.gen_range(1..lits.len());
    let rhs = lits.split_off(cut);
    Constraint::new(random_formula(rng, lits), random_formula(rng, rhs))
}

fn random_formula(rng: &mut ChaCha8Rng, mut lits: Vec<Literal>) -> Formula {
    if lits.len() == 1 {
        return Formula::Lit(lits.pop().unwrap());
    }
    let cut = rng.gen_range(1..lits.len());
    let right = lits.split_off(cut);
    let (a, b) = (random_formula(rng, lits), random_formula(rng, right));
    if rng.gen_bool(0.5) {
        Formula::and(a, b)
    } else {
        Formula::or(a, b)
    }
}
