//! Enumeration over attribute types.
//!
//! A candidate's type is its attribute set. For every set T′ of occurring
//! types with `|T′| ≤ k`, the committee's attributes are exactly the union A′
//! of T′, so the constraints can be checked once per T′. The committee is one
//! top candidate of every type in T′ topped up by profit from the rest of
//! those types.

use std::collections::{BTreeMap, BTreeSet};

use super::{ensure_valid, Ranking, SolveError};
use crate::model::{committee_ids, Attribute, Indexed, Instance, Optimum, Solution, SolverTag};

/// Default cap on the number of occurring types.
pub const DEFAULT_TYPE_CAP: usize = 16;

/// Hard ceiling on the cap; type subsets are enumerated as bitmasks.
pub const MAX_TYPE_CAP: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FptConfig {
    pub type_cap: usize,
}

impl Default for FptConfig {
    fn default() -> Self {
        FptConfig {
            type_cap: DEFAULT_TYPE_CAP,
        }
    }
}

/// An attribute set viewed as a 0/1 vector over the instance's attributes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector(pub BTreeSet<Attribute>);

impl TypeVector {
    pub fn attributes(&self) -> &BTreeSet<Attribute> {
        &self.0
    }
}

impl std::fmt::Display for TypeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<&str> = self.0.iter().map(Attribute::as_str).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Candidates grouped by type; each list sorted by profit (desc), then id.
pub fn candidate_types(instance: &Instance) -> BTreeMap<TypeVector, Vec<String>> {
    types_indexed(instance, &Ranking::new(instance))
        .into_iter()
        .map(|(t, cs)| (t, cs.into_iter().map(|c| instance.candidates[c].id.clone()).collect()))
        .collect()
}

fn types_indexed(instance: &Instance, ranking: &Ranking) -> BTreeMap<TypeVector, Vec<usize>> {
    let mut out: BTreeMap<TypeVector, Vec<usize>> = BTreeMap::new();
    for (i, c) in instance.candidates.iter().enumerate() {
        out.entry(TypeVector(c.attributes.clone())).or_default().push(i);
    }
    for cs in out.values_mut() {
        ranking.sort(cs);
    }
    out
}

/// |T|, the number of distinct attribute sets among the candidates.
pub fn occurring_type_count(instance: &Instance) -> usize {
    instance.candidates.iter().map(|c| &c.attributes).collect::<BTreeSet<_>>().len()
}

/// Outcome of the search, including the winning type set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FptOutcome {
    pub solution: Solution,
    pub winning_types: Option<Vec<TypeVector>>,
    /// Type sets that passed the constraint check and could be filled to `k`.
    pub admissible_sets: usize,
}

struct Search {
    types: Vec<(TypeVector, Vec<usize>)>,
    type_attrs: Vec<Vec<usize>>,
    indexed: Indexed,
    ranking: Ranking,
    k: usize,
}

impl Search {
    fn new(instance: &Instance) -> Search {
        let ranking = Ranking::new(instance);
        let types: Vec<_> = types_indexed(instance, &ranking).into_iter().collect();
        let indexed = Indexed::new(instance);
        let type_attrs = types.iter().map(|(_, cs)| indexed.cand_attrs[cs[0]].clone()).collect();
        Search {
            types,
            type_attrs,
            indexed,
            ranking,
            k: instance.k,
        }
    }

    /// Best committee using exactly the types in `chosen`, if any.
    fn evaluate(&self, chosen: &[usize]) -> Option<(i64, Vec<usize>)> {
        if chosen.len() > self.k {
            return None;
        }
        let mut truth = vec![false; self.indexed.attr_count];
        for &t in chosen {
            for &a in &self.type_attrs[t] {
                truth[a] = true;
            }
        }
        if !self.indexed.satisfied(&truth) {
            return None;
        }
        let mut members: Vec<usize> = chosen.iter().map(|&t| self.types[t].1[0]).collect();
        let mut rest: Vec<usize> = chosen.iter().flat_map(|&t| self.types[t].1[1..].iter().copied()).collect();
        self.ranking.sort(&mut rest);
        let need = self.k - members.len();
        if rest.len() < need {
            return None;
        }
        members.extend_from_slice(&rest[..need]);
        Some((self.ranking.profit(&members), members))
    }
}

pub fn solve_fpt(instance: &Instance) -> Result<Solution, SolveError> {
    solve_fpt_with(instance, &FptConfig::default())
}

pub fn solve_fpt_with(instance: &Instance, config: &FptConfig) -> Result<Solution, SolveError> {
    solve_fpt_detailed(instance, config).map(|o| o.solution)
}

/// Runs the search over all type subsets in canonical order (bitmask order
/// over the sorted type list); ties keep the first set found.
pub fn solve_fpt_detailed(instance: &Instance, config: &FptConfig) -> Result<FptOutcome, SolveError> {
    ensure_valid(instance)?;
    let types = occurring_type_count(instance);
    let cap = config.type_cap.min(MAX_TYPE_CAP);
    if types > cap {
        return Err(SolveError::CapExceeded { types, cap });
    }
    let search = Search::new(instance);
    let mut best: Option<(i64, Vec<usize>, Vec<usize>)> = None;
    let mut admissible_sets = 0;
    for mask in 0u64..1 << types {
        if mask.count_ones() as usize > instance.k {
            continue;
        }
        let chosen: Vec<usize> = (0..types).filter(|t| mask >> t & 1 == 1).collect();
        if let Some((profit, members)) = search.evaluate(&chosen) {
            admissible_sets += 1;
            if best.as_ref().is_none_or(|(bp, _, _)| profit > *bp) {
                best = Some((profit, members, chosen));
            }
        }
    }
    let winning_types = best
        .as_ref()
        .map(|(_, _, chosen)| chosen.iter().map(|&t| search.types[t].0.clone()).collect());
    let best = best.map(|(profit, members, _)| Optimum {
        committee: committee_ids(instance, members),
        profit,
    });
    Ok(FptOutcome {
        solution: Solution::from_optimum(best, instance.p, SolverTag::Fpt),
        winning_types,
        admissible_sets,
    })
}

/// The committee the search builds for one fixed type set T′, if T′ passes
/// the constraint check and its types hold at least `k` candidates.
pub fn evaluate_type_set(instance: &Instance, type_set: &[TypeVector]) -> Option<Optimum> {
    let search = Search::new(instance);
    let mut chosen = Vec::new();
    for t in type_set {
        chosen.push(search.types.iter().position(|(u, _)| u == t)?);
    }
    chosen.sort_unstable();
    chosen.dedup();
    search.evaluate(&chosen).map(|(profit, members)| Optimum {
        committee: committee_ids(instance, members),
        profit,
    })
}
