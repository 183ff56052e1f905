//! Ordered rooted k-ary trees and tree-pair diagrams.
//!
//! A [`TreeDiagram`] `(top, bottom)` stands for the group element that maps
//! the i-th leaf interval of the top tree onto the i-th leaf interval of the
//! bottom tree. Group equality is equality of reduced diagrams.

use std::fmt;

use crate::error::{Error, Result};

/// Number of children of every internal node. Only 2 (F), 3 (F₃) and 4 (F₄)
/// are supported.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arity(u8);

impl Arity {
    pub const BINARY: Arity = Arity(2);
    pub const TERNARY: Arity = Arity(3);
    pub const QUATERNARY: Arity = Arity(4);

    pub fn new(k: usize) -> Result<Arity> {
        match k {
            2..=4 => Ok(Arity(k as u8)),
            _ => Err(Error::UnsupportedArity(k)),
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered rooted tree. The arity is not stored; [`TreeDiagram`] keeps it
/// and checks that every node agrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Vec<Tree>),
}

impl Tree {
    /// A single node whose `k` children are leaves.
    pub fn caret(k: Arity) -> Tree {
        Tree::Node(vec![Tree::Leaf; k.get()])
    }

    /// The right comb (right vine) with `leaves` leaves. Panics unless
    /// `leaves ≡ 1 (mod k-1)`.
    pub fn right_vine(k: Arity, leaves: usize) -> Tree {
        let k = k.get();
        assert!(leaves >= 1 && (leaves - 1) % (k - 1) == 0, "no {k}-ary tree has {leaves} leaves");
        let mut t = Tree::Leaf;
        for _ in 0..(leaves - 1) / (k - 1) {
            let mut children = vec![Tree::Leaf; k - 1];
            children.push(t);
            t = Tree::Node(children);
        }
        t
    }

    /// Parses the dot/parenthesis grammar: a leaf is `.`, a node is `(`
    /// followed by exactly `k` subtrees and `)`. Whitespace is ignored.
    pub fn parse(text: &str, arity: Arity) -> Result<Tree> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let tree = parse_subtree(bytes, &mut pos, arity.get())?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::TreeSyntax { pos, msg: "trailing input".into() });
        }
        Ok(tree)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn children(&self) -> &[Tree] {
        match self {
            Tree::Leaf => &[],
            Tree::Node(c) => c,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(c) => c.iter().map(Tree::leaf_count).sum(),
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(c) => 1 + c.iter().map(Tree::internal_count).sum::<usize>(),
        }
    }

    /// Checks that every internal node has exactly `k` children.
    pub fn check_arity(&self, k: Arity) -> Result<()> {
        match self {
            Tree::Leaf => Ok(()),
            Tree::Node(c) if c.len() != k.get() => {
                Err(Error::ArityMismatch { expected: k.get(), found: c.len() })
            }
            Tree::Node(c) => c.iter().try_for_each(|t| t.check_arity(k)),
        }
    }

    /// Leaf addresses, left to right, as digit strings over `0..k`.
    pub fn branch_words(&self) -> Vec<Vec<u8>> {
        fn walk(t: &Tree, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            match t {
                Tree::Leaf => out.push(prefix.clone()),
                Tree::Node(c) => {
                    for (i, child) in c.iter().enumerate() {
                        prefix.push(i as u8);
                        walk(child, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Depth of the leftmost leaf.
    pub fn leftmost_depth(&self) -> usize {
        let mut t = self;
        let mut d = 0;
        while let Tree::Node(c) = t {
            t = &c[0];
            d += 1;
        }
        d
    }

    /// Depth of the rightmost leaf.
    pub fn rightmost_depth(&self) -> usize {
        let mut t = self;
        let mut d = 0;
        while let Tree::Node(c) = t {
            t = c.last().expect("node without children");
            d += 1;
        }
        d
    }

    pub fn is_right_vine(&self) -> bool {
        let mut t = self;
        while let Tree::Node(c) = t {
            let (last, rest) = c.split_last().expect("node without children");
            if !rest.iter().all(Tree::is_leaf) {
                return false;
            }
            t = last;
        }
        true
    }

    /// Replaces leaf `i` by a caret.
    pub fn expand_leaf(&self, i: usize, k: Arity) -> Result<Tree> {
        let n = self.leaf_count();
        if i >= n {
            return Err(Error::LeafIndex { index: i, leaves: n });
        }
        let mut subs = vec![Tree::Leaf; n];
        subs[i] = Tree::caret(k);
        Ok(self.graft(&subs))
    }

    /// Replaces leaf `j` by `subs[j]` for every `j`.
    pub fn graft(&self, subs: &[Tree]) -> Tree {
        fn walk(t: &Tree, subs: &[Tree], next: &mut usize) -> Tree {
            match t {
                Tree::Leaf => {
                    *next += 1;
                    subs[*next - 1].clone()
                }
                Tree::Node(c) => Tree::Node(c.iter().map(|x| walk(x, subs, next)).collect()),
            }
        }
        debug_assert_eq!(subs.len(), self.leaf_count());
        walk(self, subs, &mut 0)
    }

    /// First-leaf indices of all carets (nodes whose children are all leaves).
    pub fn caret_starts(&self) -> Vec<usize> {
        fn walk(t: &Tree, offset: &mut usize, out: &mut Vec<usize>) {
            match t {
                Tree::Leaf => *offset += 1,
                Tree::Node(c) if c.iter().all(Tree::is_leaf) => {
                    out.push(*offset);
                    *offset += c.len();
                }
                Tree::Node(c) => c.iter().for_each(|x| walk(x, offset, out)),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut 0, &mut out);
        out
    }

    /// Collapses the caret whose first leaf is `i` into a single leaf.
    /// Returns `None` when there is no such caret.
    pub fn collapse_caret(&self, i: usize) -> Option<Tree> {
        fn walk(t: &Tree, i: usize, offset: &mut usize, hit: &mut bool) -> Tree {
            match t {
                Tree::Leaf => {
                    *offset += 1;
                    Tree::Leaf
                }
                Tree::Node(c) if *offset == i && c.iter().all(Tree::is_leaf) => {
                    *offset += c.len();
                    *hit = true;
                    Tree::Leaf
                }
                Tree::Node(c) => Tree::Node(c.iter().map(|x| walk(x, i, offset, hit)).collect()),
            }
        }
        let mut hit = false;
        let t = walk(self, i, &mut 0, &mut hit);
        hit.then_some(t)
    }

    /// Reverses child order recursively.
    pub fn mirror(&self) -> Tree {
        match self {
            Tree::Leaf => Tree::Leaf,
            Tree::Node(c) => Tree::Node(c.iter().rev().map(Tree::mirror).collect()),
        }
    }

    /// Smallest tree refining both `self` and `other`.
    pub fn union(&self, other: &Tree) -> Tree {
        match (self, other) {
            (Tree::Leaf, t) | (t, Tree::Leaf) => t.clone(),
            (Tree::Node(a), Tree::Node(b)) => {
                Tree::Node(a.iter().zip(b).map(|(x, y)| x.union(y)).collect())
            }
        }
    }

    /// For a refinement `fine` of `self`, the subtree of `fine` hanging
    /// below each leaf of `self`, left to right.
    pub fn leaf_subtrees(&self, fine: &Tree) -> Vec<Tree> {
        fn walk(coarse: &Tree, fine: &Tree, out: &mut Vec<Tree>) {
            match (coarse, fine) {
                (Tree::Leaf, f) => out.push(f.clone()),
                (Tree::Node(a), Tree::Node(b)) => {
                    a.iter().zip(b).for_each(|(x, y)| walk(x, y, out));
                }
                (Tree::Node(_), Tree::Leaf) => panic!("not a refinement"),
            }
        }
        let mut out = Vec::new();
        walk(self, fine, &mut out);
        out
    }

    /// For every node in preorder: first and last leaf, children, height.
    pub(crate) fn node_spans(&self) -> Vec<NodeSpan> {
        fn walk(t: &Tree, offset: &mut usize, out: &mut Vec<NodeSpan>) -> usize {
            match t {
                Tree::Leaf => {
                    *offset += 1;
                    0
                }
                Tree::Node(c) => {
                    let me = out.len();
                    out.push(NodeSpan { first: *offset, last: 0, children: Vec::new(), height: 0 });
                    let mut height = 0;
                    let mut children = Vec::with_capacity(c.len());
                    for child in c {
                        let start = *offset;
                        let idx = out.len();
                        let h = walk(child, offset, out);
                        height = height.max(h + 1);
                        children.push(if child.is_leaf() {
                            ChildRef::Leaf(start)
                        } else {
                            ChildRef::Node(idx)
                        });
                    }
                    out[me].last = *offset - 1;
                    out[me].children = children;
                    out[me].height = height;
                    height
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut 0, &mut out);
        out
    }
}

/// Flattened view of one internal node; produced in preorder so index 0 is
/// the root.
#[derive(Clone, Debug)]
pub(crate) struct NodeSpan {
    pub first: usize,
    pub last: usize,
    pub children: Vec<ChildRef>,
    /// Leaves have height 0.
    pub height: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) enum ChildRef {
    /// Leaf index.
    Leaf(usize),
    /// Index into the preorder node list.
    Node(usize),
}

impl ChildRef {
    pub fn first_leaf(self, spans: &[NodeSpan]) -> usize {
        match self {
            ChildRef::Leaf(i) => i,
            ChildRef::Node(n) => spans[n].first,
        }
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_subtree(bytes: &[u8], pos: &mut usize, k: usize) -> Result<Tree> {
    skip_ws(bytes, pos);
    match bytes.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(Tree::Leaf)
        }
        Some(b'(') => {
            *pos += 1;
            let mut children = Vec::with_capacity(k);
            loop {
                skip_ws(bytes, pos);
                match bytes.get(*pos) {
                    Some(b')') => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => children.push(parse_subtree(bytes, pos, k)?),
                    None => {
                        return Err(Error::TreeSyntax { pos: *pos, msg: "unclosed `(`".into() })
                    }
                }
            }
            if children.len() != k {
                return Err(Error::ArityMismatch { expected: k, found: children.len() });
            }
            Ok(Tree::Node(children))
        }
        Some(&c) => Err(Error::TreeSyntax {
            pos: *pos,
            msg: format!("unexpected character `{}`", c as char),
        }),
        None => Err(Error::TreeSyntax { pos: *pos, msg: "unexpected end of input".into() }),
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => f.write_str("."),
            Tree::Node(c) => {
                f.write_str("(")?;
                for child in c {
                    write!(f, "{child}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A pair of same-arity trees with equal leaf counts: `top` is T₊, `bottom`
/// is T₋.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeDiagram {
    top: Tree,
    bottom: Tree,
    arity: Arity,
}

impl TreeDiagram {
    pub fn new(top: Tree, bottom: Tree, arity: Arity) -> Result<TreeDiagram> {
        top.check_arity(arity)?;
        bottom.check_arity(arity)?;
        let (t, b) = (top.leaf_count(), bottom.leaf_count());
        if t != b {
            return Err(Error::LeafCountMismatch { top: t, bottom: b });
        }
        Ok(TreeDiagram { top, bottom, arity })
    }

    pub fn identity(arity: Arity) -> TreeDiagram {
        TreeDiagram { top: Tree::Leaf, bottom: Tree::Leaf, arity }
    }

    /// Parses `top|bottom`.
    pub fn parse(text: &str, arity: Arity) -> Result<TreeDiagram> {
        let (top, bottom) = text.split_once('|').ok_or_else(|| Error::TreeSyntax {
            pos: text.len(),
            msg: "expected `top|bottom`".into(),
        })?;
        let top = Tree::parse(top, arity)?;
        let bottom = Tree::parse(bottom, arity).map_err(|e| match e {
            Error::TreeSyntax { pos, msg } => Error::TreeSyntax { pos: pos + text.find('|').unwrap() + 1, msg },
            other => other,
        })?;
        TreeDiagram::new(top, bottom, arity)
    }

    pub fn top(&self) -> &Tree {
        &self.top
    }

    pub fn bottom(&self) -> &Tree {
        &self.bottom
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub fn leaf_count(&self) -> usize {
        self.top.leaf_count()
    }

    pub fn is_identity(&self) -> bool {
        self.reduce().top.is_leaf()
    }

    /// Leaf positions where both trees carry the same caret.
    pub fn opposing_carets(&self) -> Vec<usize> {
        let bottom = self.bottom.caret_starts();
        self.top
            .caret_starts()
            .into_iter()
            .filter(|i| bottom.binary_search(i).is_ok())
            .collect()
    }

    /// Cancels the pair of opposing carets starting at leaf `i`.
    pub fn cancel_caret(&self, i: usize) -> Option<TreeDiagram> {
        let top = self.top.collapse_caret(i)?;
        let bottom = self.bottom.collapse_caret(i)?;
        Some(TreeDiagram { top, bottom, arity: self.arity })
    }

    pub fn is_reduced(&self) -> bool {
        self.opposing_carets().is_empty()
    }

    /// Cancels opposing carets until none remain.
    pub fn reduce(&self) -> TreeDiagram {
        let mut d = self.clone();
        loop {
            let carets = d.opposing_carets();
            if carets.is_empty() {
                return d;
            }
            // Cancelling right to left keeps the remaining start indices valid.
            for &i in carets.iter().rev() {
                d = d.cancel_caret(i).expect("caret vanished");
            }
        }
    }

    /// Attaches a caret at leaf `i` of both trees.
    pub fn expand_at_leaf(&self, i: usize) -> Result<TreeDiagram> {
        Ok(TreeDiagram {
            top: self.top.expand_leaf(i, self.arity)?,
            bottom: self.bottom.expand_leaf(i, self.arity)?,
            arity: self.arity,
        })
    }

    /// `self` followed by `other`; the result is reduced.
    pub fn multiply(&self, other: &TreeDiagram) -> Result<TreeDiagram> {
        if self.arity != other.arity {
            return Err(Error::OperandArity(self.arity.get(), other.arity.get()));
        }
        let common = self.bottom.union(&other.top);
        let top = self.top.graft(&self.bottom.leaf_subtrees(&common));
        let bottom = other.bottom.graft(&other.top.leaf_subtrees(&common));
        Ok(TreeDiagram { top, bottom, arity: self.arity }.reduce())
    }

    pub fn invert(&self) -> TreeDiagram {
        TreeDiagram { top: self.bottom.clone(), bottom: self.top.clone(), arity: self.arity }
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, n: i64) -> TreeDiagram {
        let base = if n < 0 { self.invert() } else { self.reduce() };
        let mut acc = TreeDiagram::identity(self.arity);
        for _ in 0..n.unsigned_abs() {
            acc = acc.multiply(&base).expect("same arity");
        }
        acc
    }

    /// Prepends a root whose first k-1 children are leaves and whose last
    /// child is the old tree, in both trees.
    pub fn shift_right(&self) -> TreeDiagram {
        let wrap = |t: &Tree| {
            let mut c = vec![Tree::Leaf; self.arity.get() - 1];
            c.push(t.clone());
            Tree::Node(c)
        };
        TreeDiagram { top: wrap(&self.top), bottom: wrap(&self.bottom), arity: self.arity }.reduce()
    }

    /// Prepends a root whose first child is the old tree and whose other
    /// children are leaves, in both trees.
    pub fn shift_left(&self) -> TreeDiagram {
        let wrap = |t: &Tree| {
            let mut c = vec![t.clone()];
            c.extend(std::iter::repeat_n(Tree::Leaf, self.arity.get() - 1));
            Tree::Node(c)
        };
        TreeDiagram { top: wrap(&self.top), bottom: wrap(&self.bottom), arity: self.arity }.reduce()
    }

    /// Mirrors both trees about a vertical line.
    pub fn flip(&self) -> TreeDiagram {
        TreeDiagram { top: self.top.mirror(), bottom: self.bottom.mirror(), arity: self.arity }
    }
}

impl fmt::Display for TreeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.top, self.bottom)
    }
}
