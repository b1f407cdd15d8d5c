//! Exhaustive enumeration of all size-k committees.
//!
//! Committees are visited in lexicographic order of their sorted id sequence,
//! so the first maximum is the tie-break winner. The search is split across
//! threads by the first chosen candidate and reduced deterministically.

use rayon::prelude::*;

use super::{ensure_valid, SolveError};
use crate::model::{committee_ids, Indexed, Instance, Optimum, Solution, SolverTag};

/// Default cap on the number of committees enumerated.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Environment variable overriding the enumeration budget.
pub const BUDGET_ENV: &str = "CECAC_ENUM_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub budget: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: DEFAULT_BUDGET }
    }
}

impl OracleConfig {
    /// Default config, with the budget taken from `CECAC_ENUM_BUDGET` if set
    /// to a valid number.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        OracleConfig { budget }
    }
}

/// Result of a full enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// Number of size-k committees satisfying every constraint.
    pub count: u64,
    pub max_profit: Option<i64>,
    pub best: Option<Optimum>,
}

/// `C(n, r)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

pub fn solve_exhaustive(instance: &Instance) -> Result<Solution, SolveError> {
    solve_exhaustive_with(instance, &OracleConfig::default())
}

pub fn solve_exhaustive_with(instance: &Instance, config: &OracleConfig) -> Result<Solution, SolveError> {
    let e = enumerate_feasible_with(instance, config)?;
    Ok(Solution::from_optimum(e.best, instance.p, SolverTag::Oracle))
}

pub fn enumerate_feasible(instance: &Instance) -> Result<Enumeration, SolveError> {
    enumerate_feasible_with(instance, &OracleConfig::default())
}

pub fn enumerate_feasible_with(instance: &Instance, config: &OracleConfig) -> Result<Enumeration, SolveError> {
    ensure_valid(instance)?;
    let m = instance.candidates.len();
    let k = instance.k;
    let combinations = binomial(m, k);
    if combinations > config.budget {
        return Err(SolveError::BudgetExceeded {
            combinations,
            budget: config.budget,
        });
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| instance.candidates[a].id.cmp(&instance.candidates[b].id));
    let indexed = Indexed::new(instance);
    let search = Search {
        attrs: order.iter().map(|&c| indexed.cand_attrs[c].clone()).collect(),
        profits: order.iter().map(|&c| instance.candidates[c].profit).collect(),
        indexed: &indexed,
        k,
    };

    let acc = if k == 0 {
        let mut acc = Acc::default();
        search.visit(&[], &vec![0; indexed.attr_count], 0, &mut acc);
        acc
    } else {
        (0..=m - k)
            .into_par_iter()
            .map(|first| {
                let mut acc = Acc::default();
                let mut counts = vec![0u32; indexed.attr_count];
                let mut chosen = vec![first];
                search.add(first, &mut counts);
                search.dfs(first + 1, &mut chosen, &mut counts, search.profits[first], &mut acc);
                acc
            })
            .reduce(Acc::default, Acc::join)
    };

    let best = acc.best.map(|(profit, positions)| Optimum {
        committee: committee_ids(instance, positions.iter().map(|&p| order[p])),
        profit,
    });
    Ok(Enumeration {
        count: acc.count,
        max_profit: best.as_ref().map(|b| b.profit),
        best,
    })
}

#[derive(Default)]
struct Acc {
    count: u64,
    /// Profit and positions (into the id-sorted order) of the best committee.
    best: Option<(i64, Vec<usize>)>,
}

impl Acc {
    fn offer(&mut self, profit: i64, chosen: &[usize]) {
        self.count += 1;
        // strict improvement only: earlier committees are lexicographically smaller
        if self.best.as_ref().is_none_or(|(p, _)| profit > *p) {
            self.best = Some((profit, chosen.to_vec()));
        }
    }

    fn join(self, other: Acc) -> Acc {
        let best = match (self.best, other.best) {
            (Some(a), Some(b)) => {
                if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
                    Some(b)
                } else {
                    Some(a)
                }
            }
            (a, b) => a.or(b),
        };
        Acc {
            count: self.count + other.count,
            best,
        }
    }
}

struct Search<'a> {
    attrs: Vec<Vec<usize>>,
    profits: Vec<i64>,
    indexed: &'a Indexed,
    k: usize,
}

impl Search<'_> {
    fn add(&self, pos: usize, counts: &mut [u32]) {
        for &a in &self.attrs[pos] {
            counts[a] += 1;
        }
    }

    fn remove(&self, pos: usize, counts: &mut [u32]) {
        for &a in &self.attrs[pos] {
            counts[a] -= 1;
        }
    }

    fn visit(&self, chosen: &[usize], counts: &[u32], profit: i64, acc: &mut Acc) {
        let truth: Vec<bool> = counts.iter().map(|&c| c > 0).collect();
        if self.indexed.satisfied(&truth) {
            acc.offer(profit, chosen);
        }
    }

    fn dfs(&self, start: usize, chosen: &mut Vec<usize>, counts: &mut [u32], profit: i64, acc: &mut Acc) {
        if chosen.len() == self.k {
            self.visit(chosen, counts, profit, acc);
            return;
        }
        let remaining = self.k - chosen.len();
        for pos in start..=self.profits.len() - remaining {
            chosen.push(pos);
            self.add(pos, counts);
            self.dfs(pos + 1, chosen, counts, profit + self.profits[pos], acc);
            self.remove(pos, counts);
            chosen.pop();
        }
    }
}
