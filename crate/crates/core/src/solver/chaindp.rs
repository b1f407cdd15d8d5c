//! Polynomial DP for simple (literal to literal) constraints in which every
//! attribute occurs in at most two constraints and every candidate has at
//! most one attribute.
//!
//! Constraints fall apart into clusters of transitively shared attributes.
//! Inside a cluster, constraints that chain (`x -> y`, `y -> z`) are merged
//! into implication strings; a string holds iff its false literals form a
//! prefix, so a string's state is the prefix length `j`. Every attribute lies
//! in at most two strings, so the strings of a cluster link up into a path or
//! a cycle through their shared endpoint attributes. The DP walks that
//! sequence, keeping neighbouring strings consistent on the shared attribute,
//! and the per-cluster tables are convolved over the number of chosen
//! candidates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub use super::Cell;
use super::{ensure_valid, Ranking, Score, SolveError};
use crate::lang::{normalize_simple, Literal, SimpleConstraint};
use crate::model::{committee_ids, Attribute, Instance, Optimum, Solution, SolverTag};

fn not_applicable(reason: impl Into<String>) -> SolveError {
    SolveError::not_applicable(SolverTag::ChainDp, reason)
}

/// Checks the preconditions and returns the normalized simple constraints.
pub fn applicable(instance: &Instance) -> Result<Vec<SimpleConstraint>, SolveError> {
    ensure_valid(instance)?;
    if let Some(c) = instance.candidates.iter().find(|c| c.attributes.len() > 1) {
        return Err(not_applicable(format!("candidate '{}' has {} attributes", c.id, c.attributes.len())));
    }
    let simple = normalize_simple(&instance.constraints).map_err(|e| not_applicable(e.to_string()))?;
    if let Some((a, n)) = occurrences(&simple).into_iter().find(|(_, n)| *n > 2) {
        return Err(not_applicable(format!("attribute '{a}' occurs in {n} simple constraints")));
    }
    Ok(simple)
}

fn occurrences(simple: &[SimpleConstraint]) -> BTreeMap<&Attribute, usize> {
    let mut occ = BTreeMap::new();
    for s in simple {
        for a in s.attributes() {
            *occ.entry(a).or_default() += 1;
        }
    }
    occ
}

/// Constraints connected through shared attributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    pub constraints: Vec<SimpleConstraint>,
}

impl Cluster {
    pub fn attributes(&self) -> BTreeSet<&Attribute> {
        self.constraints.iter().flat_map(|c| c.attributes()).collect()
    }
}

/// Connected components of the attribute-sharing relation, ordered by their
/// smallest attribute name; constraints keep their input order.
pub fn cluster_constraints(simple: &[SimpleConstraint]) -> Vec<Cluster> {
    let attrs: Vec<&Attribute> = occurrences(simple).into_keys().collect();
    let index: BTreeMap<&Attribute, usize> = attrs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let mut parent: Vec<usize> = (0..attrs.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for s in simple {
        let (a, b) = (index[&s.lhs.attribute], index[&s.rhs.attribute]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        // smaller index stays root, so roots are the smallest attribute
        parent[ra.max(rb)] = ra.min(rb);
    }
    let mut groups: BTreeMap<usize, Vec<SimpleConstraint>> = BTreeMap::new();
    for s in simple {
        let root = find(&mut parent, index[&s.lhs.attribute]);
        groups.entry(root).or_default().push(s.clone());
    }
    groups.into_values().map(|constraints| Cluster { constraints }).collect()
}

/// A chain `x1 -> x2 -> ... -> xt` of simple constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicationString {
    pub literals: Vec<Literal>,
}

impl ImplicationString {
    pub fn first(&self) -> &Literal {
        &self.literals[0]
    }

    pub fn last(&self) -> &Literal {
        self.literals.last().unwrap()
    }

    /// Number of literals t.
    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn attributes(&self) -> BTreeSet<&Attribute> {
        self.literals.iter().map(|l| &l.attribute).collect()
    }

    /// Truth values forced by "the first `j` literals are false, the rest
    /// true"; `None` if that pattern contradicts itself.
    pub fn truth_at(&self, j: usize) -> Option<BTreeMap<&Attribute, bool>> {
        let mut truth = BTreeMap::new();
        for (pos, l) in self.literals.iter().enumerate() {
            let value = l.positive == (pos >= j);
            if *truth.entry(&l.attribute).or_insert(value) != value {
                return None;
            }
        }
        Some(truth)
    }

    /// Prefix lengths with a consistent truth pattern.
    pub fn legal_prefixes(&self) -> Vec<usize> {
        (0..=self.len()).filter(|&j| self.truth_at(j).is_some()).collect()
    }

    /// Whether every constraint of the string holds.
    pub fn holds<F>(&self, truth: &F) -> bool
    where
        F: Fn(&Attribute) -> bool + ?Sized,
    {
        self.prefix_length(truth).is_some()
    }

    /// Number of leading false literals if the false literals form a prefix.
    pub fn prefix_length<F>(&self, truth: &F) -> Option<usize>
    where
        F: Fn(&Attribute) -> bool + ?Sized,
    {
        let values: Vec<bool> = self.literals.iter().map(|l| l.holds_when(truth(&l.attribute))).collect();
        let j = values.iter().take_while(|v| !**v).count();
        values[j..].iter().all(|v| *v).then_some(j)
    }

    pub fn constraints(&self) -> Vec<SimpleConstraint> {
        self.literals
            .windows(2)
            .map(|w| SimpleConstraint::new(w[0].clone(), w[1].clone()))
            .collect()
    }
}

impl fmt::Display for ImplicationString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.literals.iter().map(Literal::to_string).collect();
        f.write_str(&parts.join(" -> "))
    }
}

/// Merges chaining constraints into maximal strings. A closed chain such as
/// `a -> b, b -> a` becomes a string that starts and ends with `a`.
pub fn build_strings(constraints: &[SimpleConstraint]) -> Vec<ImplicationString> {
    let n = constraints.len();
    let next: Vec<Option<usize>> = (0..n)
        .map(|c| (0..n).find(|&d| d != c && constraints[d].lhs == constraints[c].rhs))
        .collect();
    let mut has_prev = vec![false; n];
    for d in next.iter().flatten() {
        has_prev[*d] = true;
    }
    let mut used = vec![false; n];
    let mut out = Vec::new();
    let walk = |start: usize, used: &mut Vec<bool>| {
        let mut literals = vec![constraints[start].lhs.clone()];
        let mut c = Some(start);
        while let Some(i) = c.filter(|&i| !used[i]) {
            used[i] = true;
            literals.push(constraints[i].rhs.clone());
            c = next[i];
        }
        ImplicationString { literals }
    };
    for start in 0..n {
        if !has_prev[start] && !used[start] {
            out.push(walk(start, &mut used));
        }
    }
    for start in 0..n {
        if !used[start] {
            out.push(walk(start, &mut used));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeViolation {
    #[error("attribute '{attribute}' occurs in {occurrences} constraints of the cluster")]
    Attribute { attribute: String, occurrences: usize },
    #[error("string-graph vertex {vertex} has degree {degree}")]
    Vertex { vertex: usize, degree: usize },
}

/// Strings of a cluster as a graph: strings sharing an attribute at their
/// first literals or at their last literals form one vertex, and a directed
/// edge joins the vertex of `S1` to that of `S2` when the last literal of
/// `S1` is the negation of the first literal of `S2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringGraph {
    pub strings: Vec<ImplicationString>,
    /// Vertex -> indices of its strings.
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl StringGraph {
    pub fn vertex_of(&self, string: usize) -> usize {
        self.vertices.iter().position(|v| v.contains(&string)).unwrap()
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == vertex) + usize::from(b == vertex))
            .sum()
    }
}

pub fn build_strings_graph(cluster: &Cluster) -> Result<StringGraph, DegreeViolation> {
    if let Some((a, n)) = occurrences(&cluster.constraints).into_iter().find(|(_, n)| *n > 2) {
        return Err(DegreeViolation::Attribute {
            attribute: a.to_string(),
            occurrences: n,
        });
    }
    let strings = build_strings(&cluster.constraints);
    let n = strings.len();
    let mut group: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for b in a + 1..n {
            let (sa, sb) = (&strings[a], &strings[b]);
            if sa.first().attribute == sb.first().attribute || sa.last().attribute == sb.last().attribute {
                let (ga, gb) = (group[a], group[b]);
                for g in group.iter_mut() {
                    if *g == gb {
                        *g = ga;
                    }
                }
            }
        }
    }
    let roots: Vec<usize> = group.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let vertices: Vec<Vec<usize>> = roots
        .iter()
        .map(|r| (0..n).filter(|&s| group[s] == *r).collect())
        .collect();
    let vertex = |s: usize| roots.iter().position(|r| *r == group[s]).unwrap();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && *strings[a].last() == strings[b].first().negated() {
                edges.push((vertex(a), vertex(b)));
            }
        }
    }
    let graph = StringGraph {
        strings,
        vertices,
        edges,
    };
    for v in 0..graph.vertices.len() {
        let degree = graph.degree(v);
        if degree > 2 {
            return Err(DegreeViolation::Vertex { vertex: v, degree });
        }
    }
    Ok(graph)
}

/// Table of one string: entry `(i, j)` is the best profit of choosing `i`
/// candidates from the owners of the string's attributes such that exactly
/// the first `j` literals are false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixDpTable {
    /// `rows[i][j]` for `0 ≤ i ≤ k`, `0 ≤ j ≤ t`.
    rows: Vec<Vec<Cell>>,
}

impl PrefixDpTable {
    pub fn k(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn t(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn cell(&self, i: usize, j: usize) -> &Cell {
        &self.rows[i][j]
    }

    pub fn value(&self, i: usize, j: usize) -> Score {
        self.rows[i][j].value
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &Cell)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, c)| (i, j, c)))
    }
}

struct Owners<'a> {
    ranking: Ranking,
    /// Rank-sorted owners per attribute.
    of: BTreeMap<&'a Attribute, Vec<usize>>,
}

impl<'a> Owners<'a> {
    fn new(instance: &'a Instance) -> Owners<'a> {
        let ranking = Ranking::new(instance);
        let mut of: BTreeMap<&Attribute, Vec<usize>> = BTreeMap::new();
        for (i, c) in instance.candidates.iter().enumerate() {
            for a in &c.attributes {
                of.entry(a).or_default().push(i);
            }
        }
        for v in of.values_mut() {
            ranking.sort(v);
        }
        Owners { ranking, of }
    }

    fn get(&self, a: &Attribute) -> &[usize] {
        self.of.get(a).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Prefix table counting only the attributes outside `excluded`. N is
    /// the top owner of every true counted attribute, P the best remaining
    /// owners of those attributes.
    fn table(&self, s: &ImplicationString, excluded: &BTreeSet<&Attribute>, k: usize) -> PrefixDpTable {
        let t = s.len();
        let mut rows = vec![vec![Cell::empty(); t + 1]; k + 1];
        for j in 0..=t {
            let Some(truth) = s.truth_at(j) else { continue };
            let mut required = Vec::new();
            let mut spare = Vec::new();
            let mut possible = true;
            for (a, _) in truth.iter().filter(|(a, v)| **v && !excluded.contains(*a)) {
                match self.get(a).split_first() {
                    Some((top, rest)) => {
                        required.push(*top);
                        spare.extend_from_slice(rest);
                    }
                    None => possible = false,
                }
            }
            if !possible {
                continue;
            }
            self.ranking.sort(&mut required);
            self.ranking.sort(&mut spare);
            let base = self.ranking.profit(&required);
            for (i, row) in rows.iter_mut().enumerate() {
                if i < required.len() || i - required.len() > spare.len() {
                    continue;
                }
                let extra = &spare[..i - required.len()];
                row[j] = Cell {
                    value: Score::Finite(base + self.ranking.profit(extra)),
                    irreplaceable: required.clone(),
                    replaceable: extra.to_vec(),
                };
            }
        }
        PrefixDpTable { rows }
    }
}

/// Prefix table of a string over every one of its attributes.
pub fn string_prefix_table(s: &ImplicationString, instance: &Instance, k: usize) -> PrefixDpTable {
    Owners::new(instance).table(s, &BTreeSet::new(), k)
}

/// Best (N, P) per number of chosen candidates `0..=k`.
type CountTable = Vec<Option<Cell>>;

fn entry_value(c: &Option<Cell>) -> Option<i64> {
    c.as_ref().and_then(|c| c.value.finite())
}

/// Order of the strings along the path or cycle of one component.
struct Walk {
    strings: Vec<usize>,
    /// `links[i]` joins `strings[i]` and `strings[i + 1]`.
    links: Vec<Attribute>,
    /// Attribute joining the last string back to the first, for cycles.
    closing: Option<Attribute>,
}

fn endpoint_links(strings: &[ImplicationString]) -> Vec<(usize, usize, Attribute)> {
    let mut at: BTreeMap<&Attribute, Vec<usize>> = BTreeMap::new();
    for (i, s) in strings.iter().enumerate() {
        for a in BTreeSet::from([&s.first().attribute, &s.last().attribute]) {
            at.entry(a).or_default().push(i);
        }
    }
    at.into_iter()
        .filter_map(|(a, ss)| match ss[..] {
            [x, y] => Some((x, y, a.clone())),
            _ => None,
        })
        .collect()
}

fn walks(strings: &[ImplicationString]) -> Vec<Walk> {
    let links = endpoint_links(strings);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); strings.len()];
    for (l, (x, y, _)) in links.iter().enumerate() {
        adj[*x].push(l);
        adj[*y].push(l);
    }
    for a in &adj {
        assert!(a.len() <= 2, "string linked to more than two others");
    }
    let other = |l: usize, s: usize| if links[l].0 == s { links[l].1 } else { links[l].0 };
    let mut seen = vec![false; strings.len()];
    let mut out = Vec::new();
    // paths first start from an end, then whatever remains are cycles
    let starts: Vec<usize> = (0..strings.len())
        .filter(|&s| adj[s].len() < 2)
        .chain(0..strings.len())
        .collect();
    for start in starts {
        if seen[start] {
            continue;
        }
        let mut walk = Walk {
            strings: vec![start],
            links: Vec::new(),
            closing: None,
        };
        seen[start] = true;
        let (mut cur, mut via) = (start, None);
        while let Some(&l) = adj[cur].iter().find(|&&l| Some(l) != via) {
            let nxt = other(l, cur);
            if nxt == start {
                walk.closing = Some(links[l].2.clone());
                break;
            }
            walk.links.push(links[l].2.clone());
            walk.strings.push(nxt);
            seen[nxt] = true;
            cur = nxt;
            via = Some(l);
        }
        out.push(walk);
    }
    out
}

struct Component<'s> {
    strings: Vec<&'s ImplicationString>,
    tables: Vec<PrefixDpTable>,
    /// Truth of every attribute, per string and prefix length.
    truths: Vec<Vec<Option<BTreeMap<&'s Attribute, bool>>>>,
}

impl Component<'_> {
    fn truth(&self, s: usize, j: usize, a: &Attribute) -> Option<bool> {
        self.truths[s][j].as_ref().map(|t| t[a])
    }
}

fn solve_walk(owners: &Owners, strings: &[ImplicationString], walk: &Walk, k: usize) -> CountTable {
    let n = walk.strings.len();
    let mut comp = Component {
        strings: walk.strings.iter().map(|&s| &strings[s]).collect(),
        tables: Vec::new(),
        truths: Vec::new(),
    };
    for (pos, s) in comp.strings.iter().enumerate() {
        let mut excluded = BTreeSet::new();
        if pos > 0 {
            excluded.insert(&walk.links[pos - 1]);
        }
        if pos == n - 1 && pos > 0 {
            if let Some(c) = &walk.closing {
                excluded.insert(c);
            }
        }
        comp.tables.push(owners.table(s, &excluded, k));
        comp.truths.push((0..=s.len()).map(|j| s.truth_at(j)).collect());
    }

    let cut_values: Vec<Option<bool>> = match &walk.closing {
        None => vec![None],
        Some(_) => vec![Some(false), Some(true)],
    };
    let mut result: CountTable = vec![None; k + 1];
    for cut in cut_values {
        let matches_cut = |s: usize, j: usize| match (cut, &walk.closing) {
            (Some(v), Some(a)) => comp.truth(s, j, a) == Some(v),
            _ => true,
        };
        // state[j][c]: first strings processed, current string at prefix j
        let first = &comp.tables[0];
        let mut state: Vec<CountTable> = (0..=comp.strings[0].len())
            .map(|j| {
                (0..=k)
                    .map(|c| Some(first.cell(c, j).clone()).filter(|x| x.value.is_finite() && matches_cut(0, j)))
                    .collect()
            })
            .collect();
        for pos in 1..n {
            let link = &walk.links[pos - 1];
            let table = &comp.tables[pos];
            let mut next: Vec<CountTable> = Vec::new();
            for j in 0..=comp.strings[pos].len() {
                let here = comp.truth(pos, j, link);
                let mut row: CountTable = vec![None; k + 1];
                if here.is_some() && (pos < n - 1 || matches_cut(pos, j)) {
                    for (c, slot) in row.iter_mut().enumerate() {
                        let mut best: Option<(i64, usize, usize)> = None;
                        for (jp, prev) in state.iter().enumerate() {
                            if comp.truth(pos - 1, jp, link) != here {
                                continue;
                            }
                            for (cp, e) in prev.iter().enumerate().take(c + 1) {
                                let (Some(a), Some(b)) = (entry_value(e), table.value(c - cp, j).finite()) else {
                                    continue;
                                };
                                if best.is_none_or(|(bv, _, _)| a + b > bv) {
                                    best = Some((a + b, jp, cp));
                                }
                            }
                        }
                        *slot = best.map(|(v, jp, cp)| {
                            let (x, y) = (state[jp][cp].as_ref().unwrap(), table.cell(c - cp, j));
                            Cell {
                                value: Score::Finite(v),
                                irreplaceable: owners.ranking.merge(&x.irreplaceable, &y.irreplaceable),
                                replaceable: owners.ranking.merge(&x.replaceable, &y.replaceable),
                            }
                        });
                    }
                }
                next.push(row);
            }
            state = next;
        }
        for row in state {
            for (c, e) in row.into_iter().enumerate() {
                if let Some(v) = entry_value(&e) {
                    if result[c].as_ref().is_none_or(|r| Score::Finite(v) > r.value) {
                        result[c] = e;
                    }
                }
            }
        }
    }
    result
}

/// Knapsack convolution of two count tables.
fn convolve(ranking: &Ranking, a: &CountTable, b: &CountTable) -> CountTable {
    let k = a.len() - 1;
    (0..=k)
        .map(|c| {
            let mut best: Option<(i64, usize)> = None;
            for x in 0..=c {
                if let (Some(u), Some(v)) = (entry_value(&a[x]), entry_value(&b[c - x])) {
                    if best.is_none_or(|(bv, _)| u + v > bv) {
                        best = Some((u + v, x));
                    }
                }
            }
            best.map(|(v, x)| {
                let (p, q) = (a[x].as_ref().unwrap(), b[c - x].as_ref().unwrap());
                Cell {
                    value: Score::Finite(v),
                    irreplaceable: ranking.merge(&p.irreplaceable, &q.irreplaceable),
                    replaceable: ranking.merge(&p.replaceable, &q.replaceable),
                }
            })
        })
        .collect()
}

/// Per-cluster count tables: entry `c` is the best choice of `c` candidates
/// from the owners of the cluster's attributes that satisfies the cluster.
pub fn cluster_tables(instance: &Instance, clusters: &[Cluster], k: usize) -> Vec<Vec<Option<Cell>>> {
    let owners = Owners::new(instance);
    clusters
        .iter()
        .map(|cluster| {
            let strings = build_strings(&cluster.constraints);
            let mut acc: CountTable = (0..=k).map(|c| (c == 0).then(|| Cell { value: Score::Finite(0), ..Cell::empty() })).collect();
            for walk in walks(&strings) {
                acc = convolve(&owners.ranking, &acc, &solve_walk(&owners, &strings, &walk, k));
            }
            acc
        })
        .collect()
}

pub fn solve_chain_dp(instance: &Instance) -> Result<Solution, SolveError> {
    let simple = applicable(instance)?;
    let k = instance.k;
    let clusters = cluster_constraints(&simple);
    let owners = Owners::new(instance);
    let ranking = &owners.ranking;

    let mut total: CountTable = (0..=k).map(|c| (c == 0).then(|| Cell { value: Score::Finite(0), ..Cell::empty() })).collect();
    for table in cluster_tables(instance, &clusters, k) {
        total = convolve(ranking, &total, &table);
    }

    let constrained: BTreeSet<&Attribute> = simple.iter().flat_map(|s| s.attributes()).collect();
    let mut c_minus: Vec<usize> = (0..instance.candidates.len())
        .filter(|&i| !instance.candidates[i].attributes.iter().any(|a| constrained.contains(a)))
        .collect();
    ranking.sort(&mut c_minus);

    let mut best: Option<(i64, usize)> = None;
    for (c, e) in total.iter().enumerate() {
        let Some(e) = e else { continue };
        let j = e.irreplaceable.len();
        if j > k {
            continue;
        }
        let Some(fill) = ranking.top_of_union_profit(&e.replaceable, &c_minus, k - j) else {
            continue;
        };
        let v = ranking.profit(&e.irreplaceable) + fill;
        if best.is_none_or(|(bv, _)| v > bv) {
            best = Some((v, c));
        }
    }
    let best = best.map(|(profit, c)| {
        let e = total[c].as_ref().unwrap();
        let mut members = e.irreplaceable.clone();
        members.extend(ranking.top_of_union(&e.replaceable, &c_minus, k - members.len()).unwrap());
        Optimum {
            committee: committee_ids(instance, members),
            profit,
        }
    });
    Ok(Solution::from_optimum(best, instance.p, SolverTag::ChainDp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e1, instance};
    use crate::lang::parse_constraint;
    use crate::solver::oracle::solve_exhaustive;

    fn simple(texts: &[&str]) -> Vec<SimpleConstraint> {
        let cs: Vec<_> = texts.iter().map(|t| parse_constraint(t).unwrap()).collect();
        normalize_simple(&cs).unwrap()
    }

    fn string(texts: &[&str]) -> ImplicationString {
        let strings = build_strings(&simple(texts));
        assert_eq!(strings.len(), 1);
        strings.into_iter().next().unwrap()
    }

    #[test]
    fn clusters() {
        let c = cluster_constraints(&simple(&["a1 -> a2", "a3 -> ~a2", "a5 -> a6"]));
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].constraints.len(), 2);
        assert_eq!(c[1].constraints[0].to_string(), "a5 -> a6");
        assert_eq!(cluster_constraints(&simple(&["a -> b"])).len(), 1);
        assert!(cluster_constraints(&[]).is_empty());
    }

    #[test]
    fn chain_merges_into_one_string() {
        let c = Cluster {
            constraints: simple(&["a1 -> a2", "a2 -> a3"]),
        };
        let g = build_strings_graph(&c).unwrap();
        assert_eq!(g.strings.len(), 1);
        assert_eq!(g.strings[0].to_string(), "a1 -> a2 -> a3");
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn negated_endpoint_gives_edge() {
        let c = Cluster {
            constraints: simple(&["a1 -> a2", "~a2 -> a3"]),
        };
        let g = build_strings_graph(&c).unwrap();
        assert_eq!(g.strings.len(), 2);
        assert_eq!(g.edges, [(g.vertex_of(0), g.vertex_of(1))]);
    }

    #[test]
    fn self_negation_string() {
        let s = string(&["a1 -> ~a1"]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.first().negated(), *s.last());
        assert_eq!(s.legal_prefixes(), [1]);
    }

    #[test]
    fn cycle_string_prefixes() {
        let s = string(&["a1 -> a2", "a2 -> a1"]);
        assert_eq!(s.to_string(), "a1 -> a2 -> a1");
        assert_eq!(s.legal_prefixes(), [0, 3]);
    }

    #[test]
    fn degree_violation() {
        let c = Cluster {
            constraints: simple(&["a -> b", "a -> c", "~a -> d"]),
        };
        assert!(matches!(build_strings_graph(&c), Err(DegreeViolation::Attribute { .. })));
    }

    #[test]
    fn prefix_table_positive() {
        let inst = e1();
        let s = string(&["a1 -> a2"]);
        let t = string_prefix_table(&s, &inst, 2);
        assert_eq!(t.value(2, 0), Score::Finite(5));
        assert_eq!(t.value(1, 0), Score::MinusInfinity);
        assert_eq!(t.value(1, 1), Score::Finite(2));
        assert_eq!(t.cell(1, 1).irreplaceable, [1]);
        assert_eq!(t.value(0, 2), Score::Finite(0));
    }

    #[test]
    fn prefix_table_negative() {
        let inst = e1();
        let s = string(&["~a1 -> ~a2"]);
        let t = string_prefix_table(&s, &inst, 2);
        assert_eq!(t.value(0, 0), Score::Finite(0));
        assert_eq!(t.value(1, 1), Score::Finite(3));
    }

    #[test]
    fn prefix_table_unowned_attribute() {
        let inst = instance(&["a", "b"], &[("c", &["a"], 1)], &["a -> b"], 1, 0);
        let t = string_prefix_table(&string(&["a -> b"]), &inst, 1);
        assert!(!t.value(1, 0).is_finite());
        assert!((0..=1).all(|i| !t.value(i, 1).is_finite()));
    }

    #[test]
    fn e1_optimum() {
        let s = solve_chain_dp(&e1()).unwrap();
        assert!(s.feasible);
        assert_eq!(s.committee.unwrap(), ["c3", "c4"]);
        assert_eq!(s.profit, Some(9));
    }

    #[test]
    fn two_cycle() {
        let inst = instance(&["a1", "a2"], &[("c1", &["a1"], 3), ("c2", &["a2"], 2)], &["a1 -> a2", "a2 -> a1"], 2, 5);
        let s = solve_chain_dp(&inst).unwrap();
        assert!(s.feasible);
        assert_eq!(s.committee.unwrap(), ["c1", "c2"]);
    }

    #[test]
    fn self_negation_forces_false() {
        let inst = instance(&["a1"], &[("c1", &["a1"], 9), ("c4", &[], 4)], &["a1 -> ~a1"], 1, 1);
        let s = solve_chain_dp(&inst).unwrap();
        assert_eq!(s.committee.unwrap(), ["c4"]);
    }

    #[test]
    fn agrees_with_oracle_on_small_shapes() {
        let shapes: &[&[&str]] = &[
            &["a -> b", "a -> c"],
            &["b -> a", "c -> a"],
            &["a -> b", "~b -> c", "c -> ~d"],
            &["a -> b", "b -> c", "c -> ~a"],
            &["a -> ~b", "~b -> a"],
            &["a -> b", "~a -> c"],
            &["a -> b", "b -> ~c", "~c -> d", "d -> a"],
        ];
        for cs in shapes {
            let inst = instance(
                &["a", "b", "c", "d"],
                &[
                    ("p", &["a"], 4),
                    ("q", &["a"], -1),
                    ("r", &["b"], 3),
                    ("s", &["c"], 5),
                    ("t", &["d"], 2),
                    ("u", &[], 1),
                    ("v", &["d"], 6),
                ],
                cs,
                3,
                0,
            );
            for k in 0..=inst.candidates.len() {
                let inst = Instance { k, ..inst.clone() };
                let got = solve_chain_dp(&inst).unwrap();
                let want = solve_exhaustive(&inst).unwrap();
                assert_eq!(got.best_profit(), want.best_profit(), "{cs:?} k={k}");
            }
        }
    }
}
