//! Polynomial DP for instances where every candidate has at most one
//! attribute and every attribute occurs at most once in the constraints.
//!
//! Shared attributes are first split into one fresh attribute per owner.
//! Candidates whose attribute is unconstrained (C⁻) are free filler. Over the
//! binary tree of D(R), each node q gets a table indexed by `(i, j)`: the best
//! profit of choosing `i` candidates from the pool C(q) so that q holds, `j`
//! of them irreplaceable (N) and `i - j` replaceable (P). Replaceable members
//! can be dropped or swapped without falsifying q.

use std::collections::{BTreeMap, BTreeSet};

pub use super::Cell;
use super::{ensure_valid, Ranking, Score, SolveError};
use crate::lang::{combine, Combined, Formula, FormulaTree, NodeId, NodeKind};
use crate::model::{committee_ids, Attribute, Instance, Optimum, Solution, SolverTag};

fn not_applicable(reason: impl Into<String>) -> SolveError {
    SolveError::not_applicable(SolverTag::TreeDp, reason)
}

/// Checks the preconditions: `|α(c)| ≤ 1` for every candidate and every
/// attribute used at most once as a literal across all constraints.
pub fn applicable(instance: &Instance) -> Result<(), SolveError> {
    ensure_valid(instance)?;
    if let Some(c) = instance.candidates.iter().find(|c| c.attributes.len() > 1) {
        return Err(not_applicable(format!("candidate '{}' has {} attributes", c.id, c.attributes.len())));
    }
    let mut seen = BTreeSet::new();
    for r in &instance.constraints {
        let mut repeated = None;
        let mut visit = |l: &crate::lang::Literal| {
            if !seen.insert(l.attribute.clone()) && repeated.is_none() {
                repeated = Some(l.attribute.clone());
            }
        };
        r.lhs.for_each_literal(&mut visit);
        r.rhs.for_each_literal(&mut visit);
        if let Some(a) = repeated {
            return Err(not_applicable(format!("attribute '{a}' occurs more than once in the constraints")));
        }
    }
    Ok(())
}

/// Gives every owner of a shared attribute its own copy `a^1, …, a^u`.
///
/// In the constraints `a` becomes `a^1 | … | a^u` and `~a` becomes
/// `~(a^1 | … | a^u)`. Candidates keep their ids, order and profits.
pub fn expand_attributes(instance: &Instance) -> Result<Instance, SolveError> {
    if let Some(c) = instance.candidates.iter().find(|c| c.attributes.len() > 1) {
        return Err(not_applicable(format!("candidate '{}' has {} attributes", c.id, c.attributes.len())));
    }
    let mut owners: BTreeMap<&Attribute, Vec<usize>> = BTreeMap::new();
    for (i, c) in instance.candidates.iter().enumerate() {
        for a in &c.attributes {
            owners.entry(a).or_default().push(i);
        }
    }
    let mut taken: BTreeSet<String> = instance.attributes.iter().map(|a| a.to_string()).collect();
    let mut fresh: BTreeMap<Attribute, Vec<Attribute>> = BTreeMap::new();
    let mut attributes = Vec::new();
    let mut candidates = instance.candidates.clone();
    for a in &instance.attributes {
        let own = owners.get(a).map(Vec::as_slice).unwrap_or(&[]);
        if own.len() <= 1 {
            attributes.push(a.clone());
            continue;
        }
        let mut copies = Vec::new();
        for (h, &c) in own.iter().enumerate() {
            let mut name = format!("{a}^{}", h + 1);
            while !taken.insert(name.clone()) {
                name.push('\'');
            }
            let name = Attribute::from(name);
            candidates[c].attributes = [name.clone()].into_iter().collect();
            attributes.push(name.clone());
            copies.push(name);
        }
        fresh.insert(a.clone(), copies);
    }
    let constraints = instance
        .constraints
        .iter()
        .map(|r| {
            r.map_literals(&mut |l| match fresh.get(&l.attribute) {
                None => Formula::Lit(l.clone()),
                Some(copies) => {
                    let any = Formula::disjunction(copies.iter().map(|c| Formula::atom(c.clone()))).unwrap();
                    if l.positive {
                        any
                    } else {
                        Formula::negation(any)
                    }
                }
            })
        })
        .collect();
    Ok(Instance {
        name: instance.name.clone(),
        attributes,
        candidates,
        constraints,
        k: instance.k,
        p: instance.p,
    })
}

/// Candidates whose attribute is constrained (C⁺) and the rest (C⁻), as
/// indices into `instance.candidates`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCandidates {
    pub c_plus: Vec<usize>,
    pub c_minus: Vec<usize>,
}

pub fn split_candidates(instance: &Instance) -> SplitCandidates {
    let constrained = instance.constrained_attributes();
    let (c_plus, c_minus) = (0..instance.candidates.len())
        .partition(|&i| instance.candidates[i].attributes.iter().any(|a| constrained.contains(a)));
    SplitCandidates { c_plus, c_minus }
}

/// The (V, N, P) table of one tree node, for `0 ≤ j ≤ i ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpTable {
    rows: Vec<Vec<Cell>>,
    pool: Vec<usize>,
}

impl DpTable {
    fn new(k: usize, pool: Vec<usize>) -> DpTable {
        DpTable {
            rows: (0..=k).map(|i| vec![Cell::empty(); i + 1]).collect(),
            pool,
        }
    }

    pub fn k(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn cell(&self, i: usize, j: usize) -> &Cell {
        &self.rows[i][j]
    }

    pub fn value(&self, i: usize, j: usize) -> Score {
        self.rows[i][j].value
    }

    /// C(q): every candidate owning an attribute of the subformula, by rank.
    pub fn pool(&self) -> &[usize] {
        &self.pool
    }

    /// All `(i, j, cell)` entries.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &Cell)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (i, j, c)))
    }
}

enum Source {
    Both(usize, usize),
    /// Left child holds with `r` chosen; fill from the right pool.
    Left(usize),
    Right(usize),
}

struct Builder<'a> {
    ranking: Ranking,
    owner: BTreeMap<&'a Attribute, usize>,
    k: usize,
}

impl Builder<'_> {
    fn leaf(&self, l: &crate::lang::Literal) -> DpTable {
        let owner = self.owner.get(&l.attribute).copied();
        let mut t = DpTable::new(self.k, owner.into_iter().collect());
        match (l.positive, owner) {
            (true, Some(c)) if self.k >= 1 => {
                t.rows[1][1] = Cell {
                    value: Score::Finite(self.ranking.profit(&[c])),
                    irreplaceable: vec![c],
                    replaceable: Vec::new(),
                };
            }
            (true, _) => {}
            (false, _) => t.rows[0][0].value = Score::Finite(0),
        }
        t
    }

    fn both(a: &DpTable, b: &DpTable, i: usize, j: usize, best: &mut Option<(Score, Source)>) {
        for r in 0..=i {
            for t in 0..=r.min(j) {
                if j - t > i - r {
                    continue;
                }
                let v = a.value(r, t) + b.value(i - r, j - t);
                if v.is_finite() && best.as_ref().is_none_or(|(bv, _)| v > *bv) {
                    *best = Some((v, Source::Both(r, t)));
                }
            }
        }
    }

    fn one_side(&self, held: &DpTable, other: &DpTable, i: usize, j: usize) -> Option<(Score, usize)> {
        let mut best: Option<(Score, usize)> = None;
        for r in j..=i {
            let cell = held.cell(r, j);
            if !cell.value.is_finite() {
                continue;
            }
            let Some(fill) = self.ranking.top_of_union_profit(&cell.replaceable, &other.pool, i - j) else {
                continue;
            };
            let v = Score::Finite(self.ranking.profit(&cell.irreplaceable) + fill);
            if best.is_none_or(|(bv, _)| v > bv) {
                best = Some((v, r));
            }
        }
        best
    }

    fn internal(&self, a: &DpTable, b: &DpTable, or: bool) -> DpTable {
        let pool = self.ranking.merge(&a.pool, &b.pool);
        let mut t = DpTable::new(self.k, pool);
        for i in 0..=self.k {
            for j in 0..=i {
                let mut best = None;
                Self::both(a, b, i, j, &mut best);
                if or {
                    for (side, held, other) in [(0, a, b), (1, b, a)] {
                        if let Some((v, r)) = self.one_side(held, other, i, j) {
                            if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
                                best = Some((v, if side == 0 { Source::Left(r) } else { Source::Right(r) }));
                            }
                        }
                    }
                }
                let Some((value, source)) = best else { continue };
                t.rows[i][j] = match source {
                    Source::Both(r, s) => {
                        let (x, y) = (a.cell(r, s), b.cell(i - r, j - s));
                        Cell {
                            value,
                            irreplaceable: self.ranking.merge(&x.irreplaceable, &y.irreplaceable),
                            replaceable: self.ranking.merge(&x.replaceable, &y.replaceable),
                        }
                    }
                    Source::Left(r) | Source::Right(r) => {
                        let (held, other) = if matches!(source, Source::Left(_)) { (a, b) } else { (b, a) };
                        let x = held.cell(r, j);
                        Cell {
                            value,
                            irreplaceable: x.irreplaceable.clone(),
                            replaceable: self.ranking.top_of_union(&x.replaceable, &other.pool, i - j).unwrap(),
                        }
                    }
                };
            }
        }
        t
    }
}

/// Builds the tables bottom-up and returns the root table. `visit` sees every
/// node's table once, children before parents.
///
/// `instance` must already satisfy the expanded form: each constrained
/// attribute has at most one owner and each attribute is a leaf at most once.
pub fn build_tables_with(
    instance: &Instance,
    tree: &FormulaTree,
    k: usize,
    mut visit: impl FnMut(NodeId, &DpTable),
) -> Result<DpTable, SolveError> {
    let constrained = instance.constrained_attributes();
    let mut owner = BTreeMap::new();
    for (i, c) in instance.candidates.iter().enumerate() {
        for a in &c.attributes {
            if owner.insert(a, i).is_some() && constrained.contains(a) {
                return Err(not_applicable(format!("attribute '{a}' has several owners")));
            }
        }
    }
    let mut leaf_attrs = BTreeSet::new();
    for l in tree.leaves() {
        if !leaf_attrs.insert(&l.attribute) {
            return Err(not_applicable(format!("attribute '{}' labels several leaves", l.attribute)));
        }
    }
    let builder = Builder {
        ranking: Ranking::new(instance),
        owner,
        k,
    };
    let mut tables: Vec<Option<DpTable>> = Vec::with_capacity(tree.len());
    for (id, node) in tree.nodes() {
        let table = match node {
            NodeKind::Leaf(l) => builder.leaf(l),
            NodeKind::And(a, b) | NodeKind::Or(a, b) => {
                let (x, y) = (tables[*a].take().unwrap(), tables[*b].take().unwrap());
                builder.internal(&x, &y, matches!(node, NodeKind::Or(..)))
            }
        };
        visit(id, &table);
        tables.push(Some(table));
    }
    Ok(tables.pop().flatten().expect("tree has a root"))
}

pub fn build_tables(instance: &Instance, tree: &FormulaTree, k: usize) -> Result<DpTable, SolveError> {
    build_tables_with(instance, tree, k, |_, _| {})
}

/// Best committee from the root table: N plus the top `k - j` of `P ∪ C⁻`.
fn combine_root(ranking: &Ranking, root: &DpTable, c_minus: &[usize], k: usize) -> Option<(i64, Vec<usize>)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for (i, j, cell) in root.cells() {
        if !cell.value.is_finite() {
            continue;
        }
        let Some(fill) = ranking.top_of_union_profit(&cell.replaceable, c_minus, k - j) else {
            continue;
        };
        let v = ranking.profit(&cell.irreplaceable) + fill;
        if best.is_none_or(|(bv, _, _)| v > bv) {
            best = Some((v, i, j));
        }
    }
    best.map(|(v, i, j)| {
        let cell = root.cell(i, j);
        let mut members = cell.irreplaceable.clone();
        members.extend(ranking.top_of_union(&cell.replaceable, c_minus, k - j).unwrap());
        (v, members)
    })
}

pub fn solve_tree_dp(instance: &Instance) -> Result<Solution, SolveError> {
    applicable(instance)?;
    let expanded = expand_attributes(instance)?;
    let ranking = Ranking::new(&expanded);
    let k = instance.k;
    let best = match combine(&expanded.constraints) {
        Combined::True => {
            let mut all: Vec<usize> = (0..expanded.candidates.len()).collect();
            ranking.sort(&mut all);
            all.truncate(k);
            (all.len() == k).then(|| (ranking.profit(&all), all))
        }
        Combined::Tree { tree, .. } => {
            let root = build_tables(&expanded, &tree, k)?;
            let mut c_minus = split_candidates(&expanded).c_minus;
            ranking.sort(&mut c_minus);
            combine_root(&ranking, &root, &c_minus, k)
        }
    };
    let best = best.map(|(profit, members)| Optimum {
        committee: committee_ids(instance, members),
        profit,
    });
    Ok(Solution::from_optimum(best, instance.p, SolverTag::TreeDp))
}
