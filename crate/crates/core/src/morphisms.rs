//! Tree substitutions between F, F₃ and F₄, plus the flip and the shifts.

use crate::error::{Error, Result};
use crate::tree::{Arity, Tree, TreeDiagram};

/// A fragment of a target-arity tree. `Slot(j)` is where the image of the
/// j-th child goes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Slot(usize),
    Leaf,
    Node(Vec<Pattern>),
}

/// Replaces every source node by a fixed target pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSubstitution {
    pub source: Arity,
    pub target: Arity,
    pub pattern: Pattern,
}

impl TreeSubstitution {
    pub fn iota() -> TreeSubstitution {
        use Pattern::*;
        TreeSubstitution {
            source: Arity::BINARY,
            target: Arity::TERNARY,
            pattern: Node(vec![Slot(0), Leaf, Slot(1)]),
        }
    }

    pub fn ren() -> TreeSubstitution {
        use Pattern::*;
        TreeSubstitution {
            source: Arity::TERNARY,
            target: Arity::BINARY,
            pattern: Node(vec![Slot(0), Node(vec![Slot(1), Slot(2)])]),
        }
    }

    pub fn phi() -> TreeSubstitution {
        use Pattern::*;
        TreeSubstitution {
            source: Arity::QUATERNARY,
            target: Arity::BINARY,
            pattern: Node(vec![Node(vec![Slot(0), Slot(1)]), Node(vec![Slot(2), Slot(3)])]),
        }
    }

    pub fn apply_tree(&self, t: &Tree) -> Tree {
        fn fill(p: &Pattern, kids: &[Tree]) -> Tree {
            match p {
                Pattern::Slot(j) => kids[*j].clone(),
                Pattern::Leaf => Tree::Leaf,
                Pattern::Node(c) => Tree::Node(c.iter().map(|q| fill(q, kids)).collect()),
            }
        }
        match t {
            Tree::Leaf => Tree::Leaf,
            Tree::Node(c) => {
                let kids: Vec<Tree> = c.iter().map(|x| self.apply_tree(x)).collect();
                fill(&self.pattern, &kids)
            }
        }
    }

    /// Applies the substitution to both trees and reduces.
    pub fn apply(&self, d: &TreeDiagram) -> Result<TreeDiagram> {
        if d.arity() != self.source {
            return Err(Error::WrongArity { expected: self.source.get(), found: d.arity().get() });
        }
        let top = self.apply_tree(d.top());
        let bottom = self.apply_tree(d.bottom());
        Ok(TreeDiagram::new(top, bottom, self.target)?.reduce())
    }
}

/// ι: F → F₃, each binary node (a, b) becomes (a, leaf, b).
pub fn iota(d: &TreeDiagram) -> Result<TreeDiagram> {
    TreeSubstitution::iota().apply(d)
}

/// Ren's embedding F₃ → F, each ternary node (a, b, c) becomes (a, (b, c)).
pub fn ren_embed(d: &TreeDiagram) -> Result<TreeDiagram> {
    TreeSubstitution::ren().apply(d)
}

/// Φ: F₄ → F, each 4-ary node (a, b, c, d) becomes ((a, b), (c, d)).
pub fn phi(d: &TreeDiagram) -> Result<TreeDiagram> {
    TreeSubstitution::phi().apply(d)
}

/// σ, reflection about a vertical line.
pub fn flip(d: &TreeDiagram) -> TreeDiagram {
    d.flip()
}

pub fn shift_right(d: &TreeDiagram) -> TreeDiagram {
    d.shift_right()
}

pub fn shift_left(d: &TreeDiagram) -> TreeDiagram {
    d.shift_left()
}
