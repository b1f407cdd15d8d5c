//! Literal-to-literal ("simple") constraints.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::ast::{Constraint, Formula, Literal};
use crate::model::Attribute;

/// `lhs -> rhs` between two literals.
///
/// Both literals may name the same attribute only in the self-negating form
/// `a -> ~a` (or `~a -> a`), which pins the attribute to a single value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleConstraint {
    pub lhs: Literal,
    pub rhs: Literal,
}

impl SimpleConstraint {
    pub fn new(lhs: Literal, rhs: Literal) -> Self {
        SimpleConstraint { lhs, rhs }
    }

    pub fn is_tautology(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn eval<F>(&self, truth: &F) -> bool
    where
        F: Fn(&Attribute) -> bool + ?Sized,
    {
        !self.lhs.holds_when(truth(&self.lhs.attribute)) || self.rhs.holds_when(truth(&self.rhs.attribute))
    }

    pub fn attributes(&self) -> BTreeSet<&Attribute> {
        [&self.lhs.attribute, &self.rhs.attribute].into_iter().collect()
    }

    pub fn to_constraint(&self) -> Constraint {
        Constraint::new(Formula::Lit(self.lhs.clone()), Formula::Lit(self.rhs.clone()))
    }
}

impl fmt::Display for SimpleConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("constraint '{constraint}' cannot be reduced to literal -> literal form")]
pub struct NotSimple {
    pub constraint: String,
}

/// Rewrites constraints into literal-to-literal form.
///
/// Disjunctions on the left and conjunctions on the right are split
/// (`x | x' -> y` gives `x -> y`, `x' -> y`; `x -> y & y'` gives `x -> y`,
/// `x -> y'`). A remaining piece that mentions at most two attributes is
/// replaced by its 2-clauses, each written as an implication. Tautologies
/// are dropped and duplicates removed; the set of satisfying committees is
/// unchanged.
pub fn normalize_simple(constraints: &[Constraint]) -> Result<Vec<SimpleConstraint>, NotSimple> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for c in constraints {
        let mut pieces = Vec::new();
        split(&c.lhs.to_nnf(), &c.rhs.to_nnf(), &mut pieces).map_err(|_| NotSimple {
            constraint: c.to_string(),
        })?;
        for s in pieces {
            if !s.is_tautology() && seen.insert(s.clone()) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

struct Irreducible;

fn split(lhs: &Formula, rhs: &Formula, out: &mut Vec<SimpleConstraint>) -> Result<(), Irreducible> {
    match (lhs, rhs) {
        (Formula::Or(a, b), _) => {
            split(a, rhs, out)?;
            split(b, rhs, out)
        }
        (_, Formula::And(a, b)) => {
            split(lhs, a, out)?;
            split(lhs, b, out)
        }
        (Formula::Lit(x), Formula::Lit(y)) => {
            out.push(SimpleConstraint::new(x.clone(), y.clone()));
            Ok(())
        }
        _ => clauses_of(&Constraint::new(lhs.clone(), rhs.clone()), out),
    }
}

/// Prime 2-CNF of a constraint over at most two attributes.
fn clauses_of(c: &Constraint, out: &mut Vec<SimpleConstraint>) -> Result<(), Irreducible> {
    let attrs: Vec<Attribute> = c.attributes().into_iter().cloned().collect();
    if attrs.len() > 2 {
        return Err(Irreducible);
    }
    let eval = |values: &[bool]| {
        c.eval(&|a: &Attribute| {
            let i = attrs.iter().position(|x| x == a).unwrap();
            values[i]
        })
    };
    let rows: Vec<Vec<bool>> = (0..1u32 << attrs.len())
        .map(|bits| (0..attrs.len()).map(|i| bits >> i & 1 == 1).collect())
        .collect();
    let falsifying: Vec<&Vec<bool>> = rows.iter().filter(|r| !eval(r)).collect();

    // Unit clauses: every row with attribute i set to v falsifies.
    let mut units: Vec<(usize, bool)> = Vec::new();
    for i in 0..attrs.len() {
        for v in [true, false] {
            let with_v: Vec<_> = rows.iter().filter(|r| r[i] == v).collect();
            if with_v.iter().all(|r| falsifying.contains(r)) {
                units.push((i, v));
                // attribute i must not be v: `a = v` implies `a = !v`
                out.push(SimpleConstraint::new(
                    Literal {
                        attribute: attrs[i].clone(),
                        positive: v,
                    },
                    Literal {
                        attribute: attrs[i].clone(),
                        positive: !v,
                    },
                ));
            }
        }
    }
    for row in falsifying {
        if units.iter().any(|&(i, v)| row[i] == v) {
            continue;
        }
        debug_assert_eq!(attrs.len(), 2);
        // clause: not (x = row[0] and y = row[1])
        out.push(SimpleConstraint::new(
            Literal {
                attribute: attrs[0].clone(),
                positive: row[0],
            },
            Literal {
                attribute: attrs[1].clone(),
                positive: !row[1],
            },
        ));
    }
    Ok(())
}
