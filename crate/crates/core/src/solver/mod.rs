//! Solvers. Every solver returns the best constraint-satisfying committee it
//! finds together with the verdict against the profit bound.

pub mod chaindp;
pub mod fpt;
pub mod oracle;
pub mod treedp;

use std::fmt;
use std::ops::Add;

use thiserror::Error;

use crate::model::{check_solution, classify_instance, validate_instance, Instance, Solution, SolverTag, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("invalid instance: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidInstance(Vec<Violation>),
    #[error("{solver} is not applicable: {reason}")]
    NotApplicable { solver: SolverTag, reason: String },
    #[error("enumeration of {combinations} committees exceeds the budget of {budget}")]
    BudgetExceeded { combinations: u128, budget: u128 },
    #[error("{types} occurring attribute types exceed the cap of {cap}")]
    CapExceeded { types: usize, cap: usize },
    #[error("solver {solver} produced a committee that fails verification: {detail}")]
    VerificationFailed { solver: SolverTag, detail: String },
}

impl SolveError {
    pub(crate) fn not_applicable(solver: SolverTag, reason: impl Into<String>) -> Self {
        SolveError::NotApplicable {
            solver,
            reason: reason.into(),
        }
    }
}

pub(crate) fn ensure_valid(instance: &Instance) -> Result<(), SolveError> {
    let violations = validate_instance(instance);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(SolveError::InvalidInstance(violations))
    }
}

/// DP cell value: a profit or the distinguished "unreachable" sentinel.
/// Addition absorbs: anything plus `MinusInfinity` is `MinusInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Score {
    MinusInfinity,
    Finite(i64),
}

impl Score {
    pub fn finite(self) -> Option<i64> {
        match self {
            Score::Finite(v) => Some(v),
            Score::MinusInfinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Score::Finite(_))
    }
}

impl Add for Score {
    type Output = Score;

    fn add(self, rhs: Score) -> Score {
        match (self, rhs) {
            (Score::Finite(a), Score::Finite(b)) => Score::Finite(a + b),
            _ => Score::MinusInfinity,
        }
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Score::Finite(v) => write!(f, "{v}"),
            Score::MinusInfinity => write!(f, "-inf"),
        }
    }
}

/// One DP entry: value, irreplaceable set N and replaceable set P. Sets hold
/// candidate indices sorted by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub value: Score,
    pub irreplaceable: Vec<usize>,
    pub replaceable: Vec<usize>,
}

impl Cell {
    pub(crate) fn empty() -> Cell {
        Cell {
            value: Score::MinusInfinity,
            irreplaceable: Vec::new(),
            replaceable: Vec::new(),
        }
    }
}

/// Candidates ranked by profit (descending), ties by id (ascending).
#[derive(Clone, Debug)]
pub(crate) struct Ranking {
    rank: Vec<usize>,
    profit: Vec<i64>,
}

impl Ranking {
    pub(crate) fn new(instance: &Instance) -> Ranking {
        let mut order: Vec<usize> = (0..instance.candidates.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&instance.candidates[a], &instance.candidates[b]);
            cb.profit.cmp(&ca.profit).then_with(|| ca.id.cmp(&cb.id))
        });
        let mut rank = vec![0; order.len()];
        for (r, &c) in order.iter().enumerate() {
            rank[c] = r;
        }
        Ranking {
            rank,
            profit: instance.candidates.iter().map(|c| c.profit).collect(),
        }
    }

    pub(crate) fn profit(&self, candidates: &[usize]) -> i64 {
        candidates.iter().map(|&c| self.profit[c]).sum()
    }

    pub(crate) fn sort(&self, candidates: &mut [usize]) {
        candidates.sort_by_key(|&c| self.rank[c]);
    }

    /// The best `n` of the union of two rank-sorted, disjoint lists; `None` if
    /// they hold fewer than `n` candidates together.
    pub(crate) fn top_of_union(&self, a: &[usize], b: &[usize], n: usize) -> Option<Vec<usize>> {
        if a.len() + b.len() < n {
            return None;
        }
        let mut out = Vec::with_capacity(n);
        self.walk_union(a, b, n, |c| out.push(c));
        Some(out)
    }

    /// Profit of `top_of_union(a, b, n)` without building it.
    pub(crate) fn top_of_union_profit(&self, a: &[usize], b: &[usize], n: usize) -> Option<i64> {
        if a.len() + b.len() < n {
            return None;
        }
        let mut sum = 0;
        self.walk_union(a, b, n, |c| sum += self.profit[c]);
        Some(sum)
    }

    fn walk_union(&self, a: &[usize], b: &[usize], n: usize, mut f: impl FnMut(usize)) {
        let (mut i, mut j) = (0, 0);
        for _ in 0..n {
            let take_a = match (a.get(i), b.get(j)) {
                (Some(&x), Some(&y)) => {
                    assert_ne!(x, y, "candidate pools overlap");
                    self.rank[x] < self.rank[y]
                }
                (Some(_), None) => true,
                _ => false,
            };
            if take_a {
                f(a[i]);
                i += 1;
            } else {
                f(b[j]);
                j += 1;
            }
        }
    }

    /// Merges two rank-sorted lists, asserting they are disjoint.
    pub(crate) fn merge(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        self.top_of_union(a, b, a.len() + b.len()).unwrap()
    }
}

/// Which solver `solve` should run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverChoice {
    /// Cheapest applicable solver: treedp, then chaindp, then fpt, then oracle.
    Auto,
    Only(SolverTag),
}

impl std::str::FromStr for SolverChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            Ok(SolverChoice::Auto)
        } else {
            s.parse().map(SolverChoice::Only)
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    pub oracle: oracle::OracleConfig,
    pub fpt: fpt::FptConfig,
}

/// Runs the chosen solver and re-checks any feasible committee it reports.
pub fn solve(instance: &Instance, choice: SolverChoice, options: &SolveOptions) -> Result<Solution, SolveError> {
    let tag = match choice {
        SolverChoice::Auto => {
            ensure_valid(instance)?;
            let recommended = classify_instance(instance).recommended;
            if recommended == SolverTag::Fpt && fpt::occurring_type_count(instance) > options.fpt.type_cap {
                SolverTag::Oracle
            } else {
                recommended
            }
        }
        SolverChoice::Only(tag) => tag,
    };
    let solution = match tag {
        SolverTag::Oracle => oracle::solve_exhaustive_with(instance, &options.oracle)?,
        SolverTag::TreeDp => treedp::solve_tree_dp(instance)?,
        SolverTag::ChainDp => chaindp::solve_chain_dp(instance)?,
        SolverTag::Fpt => fpt::solve_fpt_with(instance, &options.fpt)?,
    };
    verify(instance, &solution)?;
    Ok(solution)
}

/// Post-verification gate for feasible solutions.
pub fn verify(instance: &Instance, solution: &Solution) -> Result<(), SolveError> {
    let Some(best) = &solution.best else {
        return Ok(());
    };
    let fail = |detail: String| SolveError::VerificationFailed {
        solver: solution.solver,
        detail,
    };
    let verdict = check_solution(instance, &best.committee).map_err(|e| fail(e.to_string()))?;
    if !verdict.size_ok || !verdict.constraints_ok {
        return Err(fail(format!("{verdict:?}")));
    }
    if verdict.profit != best.profit {
        return Err(fail(format!("reported profit {} but committee sums to {}", best.profit, verdict.profit)));
    }
    if solution.feasible != verdict.profit_ok {
        return Err(fail("feasibility flag disagrees with the profit bound".into()));
    }
    Ok(())
}
