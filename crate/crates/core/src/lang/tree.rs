//! Binary formula tree of the combined constraint formula D(R).

use super::ast::{Constraint, Formula, Literal};

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(Literal),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
}

/// Arena of tree nodes in post-order: every child precedes its parent, so a
/// forward scan is a bottom-up traversal and the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaTree {
    nodes: Vec<NodeKind>,
}

impl FormulaTree {
    /// Builds the tree of a formula in negation normal form; `None` if the
    /// formula still contains a `Not` node.
    pub fn from_nnf(f: &Formula) -> Option<FormulaTree> {
        let mut nodes = Vec::new();
        Self::push(f, &mut nodes)?;
        Some(FormulaTree { nodes })
    }

    fn push(f: &Formula, nodes: &mut Vec<NodeKind>) -> Option<NodeId> {
        let kind = match f {
            Formula::Lit(l) => NodeKind::Leaf(l.clone()),
            Formula::Not(_) => return None,
            Formula::And(a, b) => {
                let l = Self::push(a, nodes)?;
                let r = Self::push(b, nodes)?;
                NodeKind::And(l, r)
            }
            Formula::Or(a, b) => {
                let l = Self::push(a, nodes)?;
                let r = Self::push(b, nodes)?;
                NodeKind::Or(l, r)
            }
        };
        nodes.push(kind);
        Some(nodes.len() - 1)
    }

    pub fn root(&self) -> NodeId {
        self.nodes.len() - 1
    }

    pub fn node(&self, id: NodeId) -> &NodeKind {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &NodeKind)> {
        self.nodes.iter().enumerate()
    }

    pub fn leaves(&self) -> impl Iterator<Item = &Literal> {
        self.nodes.iter().filter_map(|n| match n {
            NodeKind::Leaf(l) => Some(l),
            _ => None,
        })
    }

    /// The subformula q associated with a node.
    pub fn formula(&self, id: NodeId) -> Formula {
        match &self.nodes[id] {
            NodeKind::Leaf(l) => Formula::Lit(l.clone()),
            NodeKind::And(a, b) => Formula::and(self.formula(*a), self.formula(*b)),
            NodeKind::Or(a, b) => Formula::or(self.formula(*a), self.formula(*b)),
        }
    }

    /// The set Q of subformulas, one per node, in post-order.
    pub fn subformulas(&self) -> Vec<Formula> {
        (0..self.nodes.len()).map(|id| self.formula(id)).collect()
    }
}

/// Result of combining a constraint list into one formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Combined {
    /// No constraints: the empty conjunction.
    True,
    Tree { formula: Formula, tree: FormulaTree },
}

impl Combined {
    pub fn tree(&self) -> Option<&FormulaTree> {
        match self {
            Combined::True => None,
            Combined::Tree { tree, .. } => Some(tree),
        }
    }

    pub fn formula(&self) -> Option<&Formula> {
        match self {
            Combined::True => None,
            Combined::Tree { formula, .. } => Some(formula),
        }
    }
}

/// D(R): the conjunction of the NNF formulas `~lhs | rhs` of all constraints.
///
/// The conjunction nests to the right, `r1 & (r2 & (r3 & ...))`, which is the
/// shape of the reference tree in which `r2 & r3` is itself a node.
pub fn combine(constraints: &[Constraint]) -> Combined {
    let formula = constraints
        .iter()
        .rev()
        .map(Constraint::to_nnf_formula)
        .reduce(|acc, f| Formula::and(f, acc));
    match formula {
        None => Combined::True,
        Some(formula) => {
            let tree = FormulaTree::from_nnf(&formula).expect("NNF formula has no Not nodes");
            Combined::Tree { formula, tree }
        }
    }
}
