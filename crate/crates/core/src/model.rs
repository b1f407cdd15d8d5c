//! Domain types, validation, committee evaluation and instance classification.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lang::{is_identifier, Constraint, Formula};
use crate::solver::{chaindp, fpt, treedp};

/// Attribute name; a legal constraint-language identifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Attribute(String);

impl Attribute {
    pub fn new(name: impl Into<String>) -> Self {
        Attribute(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Attribute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Attribute {
    fn from(s: &str) -> Self {
        Attribute(s.to_string())
    }
}

impl From<String> for Attribute {
    fn from(s: String) -> Self {
        Attribute(s)
    }
}

impl From<&String> for Attribute {
    fn from(s: &String) -> Self {
        Attribute(s.clone())
    }
}

impl Borrow<str> for Attribute {
    fn borrow(&self) -> &str {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub id: String,
    pub attributes: BTreeSet<Attribute>,
    pub profit: i64,
}

impl Candidate {
    pub fn new<I, A>(id: impl Into<String>, attributes: I, profit: i64) -> Self
    where
        I: IntoIterator<Item = A>,
        A: Into<Attribute>,
    {
        Candidate {
            id: id.into(),
            attributes: attributes.into_iter().map(Into::into).collect(),
            profit,
        }
    }
}

/// An election `(C, A, R, S, alpha)` together with the committee size `k` and
/// the profit bound `p`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Instance {
    pub name: String,
    pub attributes: Vec<Attribute>,
    pub candidates: Vec<Candidate>,
    pub constraints: Vec<Constraint>,
    pub k: usize,
    pub p: i64,
}

impl Instance {
    pub fn candidate(&self, id: &str) -> Option<&Candidate> {
        self.candidates.iter().find(|c| c.id == id)
    }

    /// Same instance with a different profit bound.
    pub fn with_bound(&self, p: i64) -> Instance {
        Instance { p, ..self.clone() }
    }

    /// Number of constraints mentioning each declared attribute.
    pub fn occurrences(&self) -> BTreeMap<&Attribute, usize> {
        let mut occ: BTreeMap<&Attribute, usize> = self.attributes.iter().map(|a| (a, 0)).collect();
        for c in &self.constraints {
            for a in c.attributes() {
                *occ.entry(a).or_default() += 1;
            }
        }
        occ
    }

    /// Attributes that occur in at least one constraint.
    pub fn constrained_attributes(&self) -> BTreeSet<&Attribute> {
        self.constraints.iter().flat_map(|c| c.attributes()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyCandidateId,
    DuplicateCandidate(String),
    DuplicateAttribute(String),
    InvalidAttributeName(String),
    UndeclaredAttribute(String),
    KTooLarge { k: usize, m: usize },
}

impl Violation {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::EmptyCandidateId => "EmptyCandidateId",
            Violation::DuplicateCandidate(_) => "DuplicateCandidate",
            Violation::DuplicateAttribute(_) => "DuplicateAttribute",
            Violation::InvalidAttributeName(_) => "InvalidAttributeName",
            Violation::UndeclaredAttribute(_) => "UndeclaredAttribute",
            Violation::KTooLarge { .. } => "KTooLarge",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyCandidateId => write!(f, "candidate with empty id"),
            Violation::DuplicateCandidate(id) => write!(f, "duplicate candidate id '{id}'"),
            Violation::DuplicateAttribute(a) => write!(f, "duplicate attribute '{a}'"),
            Violation::InvalidAttributeName(a) => write!(f, "invalid attribute name '{a}'"),
            Violation::UndeclaredAttribute(a) => write!(f, "undeclared attribute '{a}'"),
            Violation::KTooLarge { k, m } => write!(f, "committee size {k} exceeds {m} candidates"),
        }
    }
}

/// Every violated structural invariant, in a deterministic order.
pub fn validate_instance(instance: &Instance) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut declared = BTreeSet::new();
    for a in &instance.attributes {
        if !is_identifier(a.as_str()) {
            out.push(Violation::InvalidAttributeName(a.to_string()));
        }
        if !declared.insert(a) {
            out.push(Violation::DuplicateAttribute(a.to_string()));
        }
    }
    let mut ids = BTreeSet::new();
    let mut undeclared = BTreeSet::new();
    for c in &instance.candidates {
        if c.id.is_empty() {
            out.push(Violation::EmptyCandidateId);
        } else if !ids.insert(c.id.as_str()) {
            out.push(Violation::DuplicateCandidate(c.id.clone()));
        }
        undeclared.extend(c.attributes.iter().filter(|a| !declared.contains(a)));
    }
    for r in &instance.constraints {
        undeclared.extend(r.attributes().into_iter().filter(|a| !declared.contains(a)));
    }
    out.extend(undeclared.into_iter().map(|a| Violation::UndeclaredAttribute(a.to_string())));
    if instance.k > instance.candidates.len() {
        out.push(Violation::KTooLarge {
            k: instance.k,
            m: instance.candidates.len(),
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown candidate id '{0}'")]
    UnknownCandidate(String),
}

/// Truth value of every declared attribute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub truth: BTreeMap<Attribute, bool>,
}

impl Assignment {
    pub fn get(&self, a: &Attribute) -> bool {
        self.truth.get(a).copied().unwrap_or(false)
    }

    pub fn true_attributes(&self) -> impl Iterator<Item = &Attribute> {
        self.truth.iter().filter(|(_, v)| **v).map(|(a, _)| a)
    }
}

fn members<'a, S: AsRef<str>>(instance: &'a Instance, committee: &[S]) -> Result<Vec<&'a Candidate>, ModelError> {
    committee
        .iter()
        .map(|id| {
            instance
                .candidate(id.as_ref())
                .ok_or_else(|| ModelError::UnknownCandidate(id.as_ref().to_string()))
        })
        .collect()
}

/// An attribute is true iff some committee member owns it.
pub fn induced_assignment<S: AsRef<str>>(instance: &Instance, committee: &[S]) -> Result<Assignment, ModelError> {
    let members = members(instance, committee)?;
    let mut truth: BTreeMap<Attribute, bool> = instance.attributes.iter().map(|a| (a.clone(), false)).collect();
    for c in members {
        for a in &c.attributes {
            truth.insert(a.clone(), true);
        }
    }
    Ok(Assignment { truth })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub size_ok: bool,
    pub constraints_ok: bool,
    /// Indices into `instance.constraints` of the violated constraints.
    pub violated: Vec<usize>,
    pub profit_ok: bool,
    pub profit: i64,
}

impl Verdict {
    pub fn all_ok(&self) -> bool {
        self.size_ok && self.constraints_ok && self.profit_ok
    }
}

/// Checks size, every constraint and the profit bound for a committee.
pub fn check_solution<S: AsRef<str>>(instance: &Instance, committee: &[S]) -> Result<Verdict, ModelError> {
    let members = members(instance, committee)?;
    let distinct: BTreeSet<&str> = members.iter().map(|c| c.id.as_str()).collect();
    let assignment = induced_assignment(instance, committee)?;
    let truth = |a: &Attribute| assignment.get(a);
    let violated: Vec<usize> = instance
        .constraints
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.eval(&truth))
        .map(|(i, _)| i)
        .collect();
    let profit = members.iter().map(|c| c.profit).sum::<i64>();
    Ok(Verdict {
        size_ok: distinct.len() == members.len() && members.len() == instance.k,
        constraints_ok: violated.is_empty(),
        violated,
        profit_ok: profit >= instance.p,
        profit,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverTag {
    Oracle,
    TreeDp,
    ChainDp,
    Fpt,
}

impl SolverTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverTag::Oracle => "oracle",
            SolverTag::TreeDp => "treedp",
            SolverTag::ChainDp => "chaindp",
            SolverTag::Fpt => "fpt",
        }
    }
}

impl fmt::Display for SolverTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for SolverTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(SolverTag::Oracle),
            "treedp" => Ok(SolverTag::TreeDp),
            "chaindp" => Ok(SolverTag::ChainDp),
            "fpt" => Ok(SolverTag::Fpt),
            other => Err(format!("unknown solver '{other}'")),
        }
    }
}

/// Best constraint-satisfying size-k committee, regardless of the bound p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    /// Sorted by id.
    pub committee: Vec<String>,
    pub profit: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub feasible: bool,
    /// Present iff feasible; sorted by id.
    pub committee: Option<Vec<String>>,
    /// Present iff feasible.
    pub profit: Option<i64>,
    pub solver: SolverTag,
    /// The optimum found, also when it misses the bound.
    pub best: Option<Optimum>,
}

impl Solution {
    pub fn from_optimum(best: Option<Optimum>, p: i64, solver: SolverTag) -> Solution {
        let feasible = best.as_ref().is_some_and(|b| b.profit >= p);
        Solution {
            feasible,
            committee: best.as_ref().filter(|_| feasible).map(|b| b.committee.clone()),
            profit: best.as_ref().filter(|_| feasible).map(|b| b.profit),
            solver,
            best,
        }
    }

    pub fn best_profit(&self) -> Option<i64> {
        self.best.as_ref().map(|b| b.profit)
    }
}

/// Sorted committee ids from candidate indices.
pub(crate) fn committee_ids(instance: &Instance, indices: impl IntoIterator<Item = usize>) -> Vec<String> {
    let mut ids: Vec<String> = indices.into_iter().map(|i| instance.candidates[i].id.clone()).collect();
    ids.sort();
    ids
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDescriptor {
    pub max_attrs_per_candidate: usize,
    pub max_attr_occurrence: usize,
    pub max_constraint_length: usize,
}

impl ClassDescriptor {
    pub fn of(instance: &Instance) -> ClassDescriptor {
        ClassDescriptor {
            max_attrs_per_candidate: instance.candidates.iter().map(|c| c.attributes.len()).max().unwrap_or(0),
            max_attr_occurrence: instance.occurrences().values().copied().max().unwrap_or(0),
            max_constraint_length: instance.constraints.iter().map(Constraint::length).max().unwrap_or(0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyConfig {
    /// Largest number of occurring attribute types for which fpt is recommended.
    pub fpt_type_cap: usize,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            fpt_type_cap: fpt::DEFAULT_TYPE_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub descriptor: ClassDescriptor,
    pub recommended: SolverTag,
}

/// Descriptor plus the cheapest applicable solver (treedp, chaindp, fpt, oracle).
pub fn classify_instance(instance: &Instance) -> Classification {
    classify_with(instance, ClassifyConfig::default())
}

pub fn classify_with(instance: &Instance, config: ClassifyConfig) -> Classification {
    let descriptor = ClassDescriptor::of(instance);
    let recommended = if treedp::applicable(instance).is_ok() {
        SolverTag::TreeDp
    } else if chaindp::applicable(instance).is_ok() {
        SolverTag::ChainDp
    } else if fpt::occurring_type_count(instance) <= config.fpt_type_cap {
        SolverTag::Fpt
    } else {
        SolverTag::Oracle
    };
    Classification {
        descriptor,
        recommended,
    }
}

/// Constraint formula over attribute indices, used on hot evaluation paths.
#[derive(Clone, Debug)]
pub(crate) enum IndexedFormula {
    Lit(usize, bool),
    And(Box<IndexedFormula>, Box<IndexedFormula>),
    Or(Box<IndexedFormula>, Box<IndexedFormula>),
}

impl IndexedFormula {
    fn from_nnf(f: &Formula, index: &HashMap<&Attribute, usize>) -> IndexedFormula {
        match f {
            Formula::Lit(l) => IndexedFormula::Lit(index[&l.attribute], l.positive),
            Formula::And(a, b) => IndexedFormula::And(Box::new(Self::from_nnf(a, index)), Box::new(Self::from_nnf(b, index))),
            Formula::Or(a, b) => IndexedFormula::Or(Box::new(Self::from_nnf(a, index)), Box::new(Self::from_nnf(b, index))),
            Formula::Not(_) => unreachable!("formula is in NNF"),
        }
    }

    pub(crate) fn eval(&self, truth: &[bool]) -> bool {
        match self {
            IndexedFormula::Lit(i, pos) => truth[*i] == *pos,
            IndexedFormula::And(a, b) => a.eval(truth) && b.eval(truth),
            IndexedFormula::Or(a, b) => a.eval(truth) || b.eval(truth),
        }
    }
}

/// Index-based view of a valid instance.
#[derive(Clone, Debug)]
pub(crate) struct Indexed {
    pub attr_count: usize,
    pub cand_attrs: Vec<Vec<usize>>,
    pub constraints: Vec<IndexedFormula>,
}

impl Indexed {
    pub(crate) fn new(instance: &Instance) -> Indexed {
        let index: HashMap<&Attribute, usize> = instance.attributes.iter().enumerate().map(|(i, a)| (a, i)).collect();
        Indexed {
            attr_count: instance.attributes.len(),
            cand_attrs: instance
                .candidates
                .iter()
                .map(|c| c.attributes.iter().map(|a| index[a]).collect())
                .collect(),
            constraints: instance
                .constraints
                .iter()
                .map(|r| IndexedFormula::from_nnf(&r.to_nnf_formula(), &index))
                .collect(),
        }
    }

    pub(crate) fn satisfied(&self, truth: &[bool]) -> bool {
        self.constraints.iter().all(|f| f.eval(truth))
    }
}
