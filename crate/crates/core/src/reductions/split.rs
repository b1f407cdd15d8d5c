//! Rewriting a wide disjunctive constraint into narrow ones with fresh
//! attributes.

use std::collections::BTreeSet;

use super::ReductionError;
use crate::lang::{Constraint, Formula, Literal};
use crate::model::{Attribute, Candidate, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// Constraints of the form `x | x' -> y`, at most three attributes each.
    FanIn3,
    /// Literal to literal constraints only.
    FanIn2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub constraints: Vec<Constraint>,
    /// Fresh attributes in creation order.
    pub fresh: Vec<Attribute>,
}

fn disjuncts(f: &Formula, out: &mut Vec<Literal>) -> Result<(), ReductionError> {
    match f {
        Formula::Lit(l) => {
            out.push(l.clone());
            Ok(())
        }
        Formula::Or(a, b) => {
            disjuncts(a, out)?;
            disjuncts(b, out)
        }
        other => Err(ReductionError::MalformedInput(format!(
            "left-hand side must be a disjunction of literals, found '{other}'"
        ))),
    }
}

/// Splits `x1 | ... | xF -> y` (F ≥ 2). Fresh attributes are `__aux_1`,
/// `__aux_2`, ... in the order they are introduced.
///
/// `FanIn3` pairs the disjuncts level by level, giving `F - 1` constraints
/// with `F - 2` fresh attributes. `FanIn2` builds the same pairing as a
/// cascade of single implications, `2F - 1` constraints with `F - 1` fresh
/// attributes; for `F = 2` it is just `x1 -> y`, `x2 -> y`.
pub fn split_constraint(r: &Constraint, mode: SplitMode) -> Result<Split, ReductionError> {
    split_with_names(r, mode, &mut |n| Attribute::from(format!("__aux_{n}")))
}

fn split_with_names(
    r: &Constraint,
    mode: SplitMode,
    fresh_name: &mut dyn FnMut(usize) -> Attribute,
) -> Result<Split, ReductionError> {
    let mut lits = Vec::new();
    disjuncts(&r.lhs, &mut lits)?;
    let Formula::Lit(target) = &r.rhs else {
        return Err(ReductionError::MalformedInput(format!(
            "right-hand side must be a single literal, found '{}'",
            r.rhs
        )));
    };
    if lits.len() < 2 {
        return Err(ReductionError::MalformedInput("left-hand side needs at least two disjuncts".into()));
    }
    let mut constraints = Vec::new();
    let mut fresh = Vec::new();
    let mut level: Vec<Formula> = lits.into_iter().map(Formula::Lit).collect();
    let imply = |lhs: Formula, rhs: Formula| Constraint::new(lhs, rhs);

    if mode == SplitMode::FanIn2 && level.len() == 2 {
        for x in level {
            constraints.push(imply(x, Formula::Lit(target.clone())));
        }
        return Ok(Split { constraints, fresh });
    }
    let stop = match mode {
        SplitMode::FanIn3 => 2,
        SplitMode::FanIn2 => 1,
    };
    while level.len() > stop {
        let mut next = Vec::new();
        let mut items = level.into_iter();
        while let Some(a) = items.next() {
            let Some(b) = items.next() else {
                next.push(a);
                break;
            };
            let name = fresh_name(fresh.len() + 1);
            let out = Formula::atom(name.clone());
            match mode {
                SplitMode::FanIn3 => constraints.push(imply(Formula::or(a, b), out.clone())),
                SplitMode::FanIn2 => {
                    constraints.push(imply(a, out.clone()));
                    constraints.push(imply(b, out.clone()));
                }
            }
            fresh.push(name);
            next.push(out);
        }
        level = next;
    }
    let lhs = Formula::disjunction(level).unwrap();
    constraints.push(imply(lhs, Formula::Lit(target.clone())));
    Ok(Split { constraints, fresh })
}

/// Splits every constraint of the form `x1 | ... | xF -> y` that is wider
/// than `mode` allows, with fresh names unique in the instance. With
/// `executable`, every fresh attribute also gets a zero-profit carrier
/// candidate `__carrier_<attr>` so the result is a complete instance.
pub fn split_instance(instance: &Instance, mode: SplitMode, executable: bool) -> Result<Instance, ReductionError> {
    let mut taken: BTreeSet<String> = instance.attributes.iter().map(|a| a.to_string()).collect();
    let mut counter = 0;
    let mut name = |_: usize| loop {
        counter += 1;
        let n = format!("__aux_{counter}");
        if taken.insert(n.clone()) {
            return Attribute::from(n);
        }
    };
    let mut out = instance.clone();
    out.constraints.clear();
    for r in &instance.constraints {
        let mut lits = Vec::new();
        let wide = disjuncts(&r.lhs, &mut lits).is_ok()
            && matches!(r.rhs, Formula::Lit(_))
            && match mode {
                SplitMode::FanIn3 => lits.len() > 2,
                SplitMode::FanIn2 => lits.len() > 1,
            };
        if !wide {
            out.constraints.push(r.clone());
            continue;
        }
        let split = split_with_names(r, mode, &mut name)?;
        for a in &split.fresh {
            if executable {
                out.candidates.push(Candidate::new(format!("__carrier_{a}"), [a.clone()], 0));
            }
            out.attributes.push(a.clone());
        }
        out.constraints.extend(split.constraints);
    }
    Ok(out)
}
