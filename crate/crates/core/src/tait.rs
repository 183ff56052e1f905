//! Tait graphs of tree diagrams and the colorings that decide membership in
//! the oriented subgroups.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::link;
use crate::morphisms;
use crate::tree::{Arity, TreeDiagram};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    Upper,
    Lower,
}

impl Half {
    pub fn name(self) -> &'static str {
        match self {
            Half::Upper => "upper",
            Half::Lower => "lower",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn name(self) -> &'static str {
        match self {
            Sign::Pos => "pos",
            Sign::Neg => "neg",
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TaitEdge {
    pub left: usize,
    pub right: usize,
    pub half: Half,
    pub sign: Sign,
}

impl TaitEdge {
    pub fn new(left: usize, right: usize, half: Half, sign: Sign) -> TaitEdge {
        TaitEdge { left, right, half, sign }
    }
}

/// Signed multigraph whose vertices sit on a line, with every edge drawn in
/// the upper or lower half-plane. Edges are kept sorted so that equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaitGraph {
    vertex_count: usize,
    edges: Vec<TaitEdge>,
}

impl TaitGraph {
    pub fn new(vertex_count: usize, mut edges: Vec<TaitEdge>) -> Result<TaitGraph> {
        if vertex_count == 0 {
            return Err(Error::InvalidTaitGraph("no vertices".into()));
        }
        for e in &mut edges {
            if e.left > e.right {
                std::mem::swap(&mut e.left, &mut e.right);
            }
            if e.right >= vertex_count {
                return Err(Error::InvalidTaitGraph(format!("edge to missing vertex v{}", e.right)));
            }
        }
        edges.sort();
        Ok(TaitGraph { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[TaitEdge] {
        &self.edges
    }

    pub fn edges_in(&self, half: Half) -> impl Iterator<Item = &TaitEdge> {
        self.edges.iter().filter(move |e| e.half == half)
    }

    /// Checks the properties of graphs coming from tree diagrams: no loops,
    /// every vertex but the first is the right end of exactly one upper and
    /// one lower edge, and the graph is connected.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count;
        let mut up = vec![0; n];
        let mut down = vec![0; n];
        for e in &self.edges {
            if e.left == e.right {
                return Err(Error::InvalidTaitGraph(format!("loop at v{}", e.left)));
            }
            match e.half {
                Half::Upper => up[e.right] += 1,
                Half::Lower => down[e.right] += 1,
            }
        }
        for v in 1..n {
            if up[v] != 1 || down[v] != 1 {
                return Err(Error::InvalidTaitGraph(format!(
                    "v{v} is the right end of {} upper and {} lower edges",
                    up[v], down[v]
                )));
            }
        }
        if up[0] + down[0] != 0 {
            return Err(Error::InvalidTaitGraph("v0 is a right end".into()));
        }
        if self.components() != 1 {
            return Err(Error::InvalidTaitGraph("graph is disconnected".into()));
        }
        Ok(())
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.left].push(e.right);
            adj[e.right].push(e.left);
        }
        adj
    }

    pub fn components(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut count = 0;
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Graphviz rendering. Vertices carry their color when one is given.
    pub fn to_dot(&self, coloring: Option<&TwoColoring>) -> String {
        let mut s = String::from("graph tait {\n");
        for v in 0..self.vertex_count {
            match coloring {
                Some(c) => writeln!(s, "  v{v} [color=\"{}\"];", c.symbol(v)).unwrap(),
                None => writeln!(s, "  v{v};").unwrap(),
            }
        }
        for e in &self.edges {
            writeln!(
                s,
                "  v{} -- v{} [half={}, sign={}];",
                e.left,
                e.right,
                e.half.name(),
                e.sign.name()
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for TaitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices={}", self.vertex_count)?;
        for e in &self.edges {
            let s = if e.sign == Sign::Pos { '+' } else { '-' };
            write!(f, " {}:v{}v{}{}", e.half.name(), e.left, e.right, s)?;
        }
        Ok(())
    }
}

/// Tait graph of a binary diagram: vertex v_i sits left of leaf i, and each
/// node with children L, R gives an edge from v_first(L) to v_first(R),
/// positive above the line and negative below.
pub fn tait_graph_binary(d: &TreeDiagram) -> Result<TaitGraph> {
    if d.arity() != Arity::BINARY {
        return Err(Error::WrongArity { expected: 2, found: d.arity().get() });
    }
    let d = d.reduce();
    let mut edges = Vec::new();
    for (tree, half, sign) in [(d.top(), Half::Upper, Sign::Pos), (d.bottom(), Half::Lower, Sign::Neg)] {
        let spans = tree.node_spans();
        for node in &spans {
            let (l, r) = (node.children[0], node.children[1]);
            edges.push(TaitEdge::new(l.first_leaf(&spans), r.first_leaf(&spans), half, sign));
        }
    }
    TaitGraph::new(d.leaf_count(), edges)
}

/// Tait graph of a ternary diagram: the black-face graph of its link
/// diagram under the checkerboard shading with the unbounded face white.
pub fn tait_graph_ternary(d: &TreeDiagram) -> Result<TaitGraph> {
    if d.arity() != Arity::TERNARY {
        return Err(Error::WrongArity { expected: 3, found: d.arity().get() });
    }
    link::checkerboard_tait(&link::build_link(d)?)
}

/// The Tait graph of a binary or ternary diagram.
pub fn tait_graph(d: &TreeDiagram) -> Result<TaitGraph> {
    match d.arity().get() {
        2 => tait_graph_binary(d),
        3 => tait_graph_ternary(d),
        k => Err(Error::WrongArity { expected: 3, found: k }),
    }
}

/// Proper 2-coloring of the vertices with v0 colored `+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColoring {
    /// `true` for `+`.
    pub plus: Vec<bool>,
}

impl TwoColoring {
    pub fn symbol(&self, v: usize) -> char {
        if self.plus[v] {
            '+'
        } else {
            '-'
        }
    }

    pub fn sign(&self, v: usize) -> Sign {
        if self.plus[v] {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for TwoColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = (0..self.plus.len()).map(|v| self.symbol(v).to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// A closed walk of odd length, listed as vertices; the last vertex is
/// adjacent to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|v| format!("v{v}")).collect();
        write!(f, "odd cycle {}", s.join(" "))
    }
}

/// Breadth-first bipartition. Every component's smallest vertex gets `+`.
pub fn two_color(g: &TaitGraph) -> std::result::Result<TwoColoring, OddCycle> {
    let adj = g.adjacency();
    let n = g.vertex_count;
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(true);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!color[v].unwrap());
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    Some(c) if c == color[v].unwrap() => {
                        return Err(odd_cycle(v, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(TwoColoring { plus: color.into_iter().map(Option::unwrap).collect() })
}

fn odd_cycle(mut a: usize, mut b: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    OddCycle(left)
}

/// Membership in the oriented subgroup: for F the Tait graph of ι(d), for F₃
/// the Tait graph of d, must be 2-colorable.
pub fn is_oriented_member(d: &TreeDiagram) -> Result<bool> {
    Ok(oriented_witness(d)?.is_ok())
}

/// The coloring, or the odd cycle that rules membership out.
pub fn oriented_witness(d: &TreeDiagram) -> Result<std::result::Result<TwoColoring, OddCycle>> {
    let g = match d.arity().get() {
        2 => tait_graph_ternary(&morphisms::iota(d)?)?,
        3 => tait_graph_ternary(d)?,
        k => return Err(Error::WrongArity { expected: 3, found: k }),
    };
    Ok(two_color(&g))
}

/// Membership in the 3-colorable subgroup of F.
pub fn is_threecolorable_member(d: &TreeDiagram) -> Result<bool> {
    Ok(crate::strip::strip_three_color(d)?.is_ok())
}
