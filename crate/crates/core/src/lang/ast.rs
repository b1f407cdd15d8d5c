use std::collections::BTreeSet;
use std::fmt;

use crate::model::Attribute;

/// An attribute occurrence, `a` (positive) or `~a` (negative).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub attribute: Attribute,
    pub positive: bool,
}

impl Literal {
    pub fn pos(attribute: impl Into<Attribute>) -> Self {
        Literal {
            attribute: attribute.into(),
            positive: true,
        }
    }

    pub fn neg(attribute: impl Into<Attribute>) -> Self {
        Literal {
            attribute: attribute.into(),
            positive: false,
        }
    }

    pub fn negated(&self) -> Self {
        Literal {
            attribute: self.attribute.clone(),
            positive: !self.positive,
        }
    }

    /// Value of the literal when its attribute has truth value `value`.
    pub fn holds_when(&self, value: bool) -> bool {
        value == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.attribute)
        } else {
            write!(f, "~{}", self.attribute)
        }
    }
}

/// Propositional formula over attribute literals.
///
/// The parser produces `Lit` with `positive = false` for `~a` and keeps `Not`
/// for negations of compound subformulas (and of already negative literals),
/// so that rendering and re-parsing is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Lit(Literal),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<Attribute>) -> Self {
        Formula::Lit(Literal::pos(name))
    }

    pub fn neg_atom(name: impl Into<Attribute>) -> Self {
        Formula::Lit(Literal::neg(name))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    /// Negation in the canonical form the parser would produce for `~f`.
    pub fn negation(f: Formula) -> Self {
        match f {
            Formula::Lit(l) if l.positive => Formula::Lit(l.negated()),
            other => Formula::Not(Box::new(other)),
        }
    }

    /// Left-associated disjunction of the given formulas; `None` when empty.
    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::or)
    }

    /// Left-associated conjunction of the given formulas; `None` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    pub fn eval<F>(&self, truth: &F) -> bool
    where
        F: Fn(&Attribute) -> bool + ?Sized,
    {
        match self {
            Formula::Lit(l) => l.holds_when(truth(&l.attribute)),
            Formula::Not(c) => !c.eval(truth),
            Formula::And(a, b) => a.eval(truth) && b.eval(truth),
            Formula::Or(a, b) => a.eval(truth) || b.eval(truth),
        }
    }

    /// Distinct attributes mentioned anywhere in the formula.
    pub fn attributes(&self) -> BTreeSet<&Attribute> {
        let mut out = BTreeSet::new();
        self.for_each_literal(&mut |l| {
            out.insert(&l.attribute);
        });
        out
    }

    pub fn for_each_literal<'a>(&'a self, f: &mut impl FnMut(&'a Literal)) {
        match self {
            Formula::Lit(l) => f(l),
            Formula::Not(c) => c.for_each_literal(f),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.for_each_literal(f);
                b.for_each_literal(f);
            }
        }
    }

    /// Number of literal occurrences (leaves).
    pub fn literal_count(&self) -> usize {
        let mut n = 0;
        self.for_each_literal(&mut |_| n += 1);
        n
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Lit(_) => 0,
            Formula::Not(c) => 1 + c.depth(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Negation normal form: negations pushed onto literals by De Morgan,
    /// double negations removed.
    pub fn to_nnf(&self) -> Formula {
        self.nnf(false)
    }

    fn nnf(&self, negate: bool) -> Formula {
        match self {
            Formula::Lit(l) => {
                if negate {
                    Formula::Lit(l.negated())
                } else {
                    Formula::Lit(l.clone())
                }
            }
            Formula::Not(c) => c.nnf(!negate),
            Formula::And(a, b) if negate => Formula::or(a.nnf(true), b.nnf(true)),
            Formula::And(a, b) => Formula::and(a.nnf(false), b.nnf(false)),
            Formula::Or(a, b) if negate => Formula::and(a.nnf(true), b.nnf(true)),
            Formula::Or(a, b) => Formula::or(a.nnf(false), b.nnf(false)),
        }
    }

    /// True when no `Not` node occurs (negation lives only in literals).
    pub fn is_nnf(&self) -> bool {
        match self {
            Formula::Lit(_) => true,
            Formula::Not(_) => false,
            Formula::And(a, b) | Formula::Or(a, b) => a.is_nnf() && b.is_nnf(),
        }
    }

    /// Replaces every literal by the formula `f` returns for it.
    pub fn map_literals(&self, f: &mut impl FnMut(&Literal) -> Formula) -> Formula {
        match self {
            Formula::Lit(l) => f(l),
            Formula::Not(c) => Formula::Not(Box::new(c.map_literals(f))),
            Formula::And(a, b) => Formula::and(a.map_literals(f), b.map_literals(f)),
            Formula::Or(a, b) => Formula::or(a.map_literals(f), b.map_literals(f)),
        }
    }
}

/// Canonical, fully parenthesized rendering.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Lit(l) => write!(f, "{l}"),
            Formula::Not(c) => write!(f, "~{c}"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

/// Canonical text of a formula; `parse_formula(&render(f)) == f`.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

/// An implication `lhs -> rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Constraint {
    pub fn new(lhs: Formula, rhs: Formula) -> Self {
        Constraint { lhs, rhs }
    }

    /// Implication semantics: holds iff `lhs` is false or `rhs` is true.
    pub fn eval<F>(&self, truth: &F) -> bool
    where
        F: Fn(&Attribute) -> bool + ?Sized,
    {
        !self.lhs.eval(truth) || self.rhs.eval(truth)
    }

    /// `~lhs | rhs` in negation normal form.
    pub fn to_nnf_formula(&self) -> Formula {
        Formula::or(Formula::Not(Box::new(self.lhs.clone())).to_nnf(), self.rhs.to_nnf())
    }

    pub fn attributes(&self) -> BTreeSet<&Attribute> {
        let mut out = self.lhs.attributes();
        out.extend(self.rhs.attributes());
        out
    }

    /// L(r): number of distinct attributes in the constraint.
    pub fn length(&self) -> usize {
        self.attributes().len()
    }

    pub fn mentions(&self, attribute: &Attribute) -> bool {
        self.attributes().contains(attribute)
    }

    pub fn literal_count(&self) -> usize {
        self.lhs.literal_count() + self.rhs.literal_count()
    }

    pub fn map_literals(&self, f: &mut impl FnMut(&Literal) -> Formula) -> Constraint {
        Constraint {
            lhs: self.lhs.map_literals(f),
            rhs: self.rhs.map_literals(f),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

/// `~lhs | rhs` with negations pushed to the literals.
pub fn to_nnf_formula(c: &Constraint) -> Formula {
    c.to_nnf_formula()
}
