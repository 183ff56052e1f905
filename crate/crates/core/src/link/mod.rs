//! Link diagrams from tree diagrams and from Tait graphs.
//!
//! A diagram is a 4-valent plane map. Crossing `c` owns the darts
//! `4c..4c+4`, numbered counterclockwise; slots 0 and 2 carry the under
//! strand, slots 1 and 3 the over strand. Each dart is paired with the dart
//! at the other end of its edge. Components without crossings are counted
//! separately as free loops.

mod pd;
mod svg;

pub use pd::{canonical_pd, PdCode};
pub use svg::render_svg;

use crate::error::{Error, Result};
use crate::morphisms;
use crate::planar::PlanarMap;
use crate::tait::{Half, Sign, TaitEdge, TaitGraph, TwoColoring};
use crate::tree::{Arity, Tree, TreeDiagram};

pub type Point = (f64, f64);

/// Drawing hints: crossing positions and waypoints for each edge.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Layout {
    pub crossings: Vec<Point>,
    /// Waypoints met when travelling from a dart to its twin.
    pub via: Vec<Vec<Point>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinkDiagram {
    twin: Vec<usize>,
    half: Vec<Half>,
    free_loops: usize,
    /// Darts whose edges cross the horizontal axis upwards, left to right.
    axis: Vec<usize>,
    /// `out[d]` is true when the strand leaves the crossing through `d`.
    orientation: Option<Vec<bool>>,
    layout: Option<Layout>,
}

impl LinkDiagram {
    /// Builds a diagram from PD quadruples. Labels are arbitrary but each
    /// must occur exactly twice.
    pub fn from_pd(quads: &[[u32; 4]], free_loops: usize) -> Result<LinkDiagram> {
        let mut seen: std::collections::HashMap<u32, usize> = Default::default();
        let mut twin = vec![usize::MAX; 4 * quads.len()];
        for (c, q) in quads.iter().enumerate() {
            for (s, &label) in q.iter().enumerate() {
                let d = 4 * c + s;
                match seen.remove(&label) {
                    Some(e) => {
                        twin[d] = e;
                        twin[e] = d;
                    }
                    None => {
                        seen.insert(label, d);
                    }
                }
            }
        }
        if let Some(label) = seen.keys().next() {
            return Err(Error::InvalidLink(format!("label {label} occurs once")));
        }
        Ok(LinkDiagram {
            twin,
            half: vec![Half::Upper; quads.len()],
            free_loops,
            axis: Vec::new(),
            orientation: None,
            layout: None,
        })
    }

    /// The crossingless diagram with `k` loops.
    pub fn unlink(k: usize) -> LinkDiagram {
        LinkDiagram {
            twin: Vec::new(),
            half: Vec::new(),
            free_loops: k,
            axis: Vec::new(),
            orientation: None,
            layout: None,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.half.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn half(&self, c: usize) -> Half {
        self.half[c]
    }

    pub fn axis(&self) -> &[usize] {
        &self.axis
    }

    pub fn layout(&self) -> Option<&Layout> {
        self.layout.as_ref()
    }

    pub fn orientation(&self) -> Option<&[bool]> {
        self.orientation.as_deref()
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// The same diagram with `k` more unlinked loops.
    pub fn with_free_loops(&self, k: usize) -> LinkDiagram {
        LinkDiagram { free_loops: self.free_loops + k, ..self.clone() }
    }

    pub fn planar_map(&self) -> PlanarMap {
        let mut m = PlanarMap::new();
        for _ in 0..self.crossing_count() {
            m.add_vertex(4);
        }
        for d in 0..self.twin.len() {
            if d < self.twin[d] {
                m.connect(d, self.twin[d]);
            }
        }
        m
    }

    /// Edges, each listed once as its smaller dart.
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.twin.len()).filter(move |&d| d < self.twin[d])
    }

    /// Strands through the crossings, as cyclic dart sequences. Each strand
    /// is listed by the darts it leaves crossings through.
    fn strands(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.twin.len()];
        let mut out = Vec::new();
        for start in 0..self.twin.len() {
            if seen[start] || seen[self.twin[start]] {
                continue;
            }
            let mut strand = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                strand.push(d);
                let t = self.twin[d];
                seen[t] = true;
                d = straight(t);
                if d == start {
                    break;
                }
            }
            out.push(strand);
        }
        out
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        self.strands().len() + self.free_loops
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> LinkDiagram {
        // Old slot s becomes new slot s-1, so the old over strand is now at 0, 2.
        let re = |d: usize| 4 * (d / 4) + (d + 3) % 4;
        let mut twin = vec![0; self.twin.len()];
        for d in 0..self.twin.len() {
            twin[re(d)] = re(self.twin[d]);
        }
        let orientation = self.orientation.as_ref().map(|o| {
            let mut n = vec![false; o.len()];
            for d in 0..o.len() {
                n[re(d)] = o[d];
            }
            n
        });
        let layout = self.layout.as_ref().map(|l| {
            let mut via = vec![Vec::new(); l.via.len()];
            for d in 0..l.via.len() {
                via[re(d)] = l.via[d].clone();
            }
            Layout { crossings: l.crossings.clone(), via }
        });
        LinkDiagram {
            twin,
            half: self.half.clone(),
            free_loops: self.free_loops,
            axis: self.axis.iter().map(|&d| re(d)).collect(),
            orientation,
            layout,
        }
    }

    /// Faces of the diagram (left of each dart) and the checkerboard shading
    /// with the unbounded face white.
    pub fn shading(&self) -> Result<Shading> {
        let map = self.planar_map();
        if map.components() > 1 {
            return Err(Error::InvalidLink("split diagrams cannot be shaded as one".into()));
        }
        let (face, count) = map.faces();
        let mut black: Vec<Option<bool>> = vec![None; count];
        if count > 0 {
            let outer = self.axis.first().map(|&d| face[d]).unwrap_or(face[0]);
            black[outer] = Some(false);
            let mut stack = vec![outer];
            let mut across: Vec<Vec<usize>> = vec![Vec::new(); count];
            for d in 0..self.twin.len() {
                across[face[d]].push(face[self.twin[d]]);
            }
            while let Some(f) = stack.pop() {
                for &g in &across[f] {
                    let want = !black[f].unwrap();
                    match black[g] {
                        None => {
                            black[g] = Some(want);
                            stack.push(g);
                        }
                        Some(b) if b != want => {
                            return Err(Error::Inconsistency("diagram is not checkerboard colorable".into()))
                        }
                        _ => {}
                    }
                }
            }
        }
        let black: Vec<bool> = black.into_iter().map(|b| b.unwrap_or(false)).collect();

        // Black faces in the order the axis meets them, then by face index.
        let mut vertex_of = vec![None; count];
        let mut order = Vec::new();
        let sweep = self.axis.iter().flat_map(|&d| [face[d], face[self.twin[d]]]);
        for f in sweep.chain(0..count) {
            if black[f] && vertex_of[f].is_none() {
                vertex_of[f] = Some(order.len());
                order.push(f);
            }
        }
        Ok(Shading { face, black, vertex_of, black_faces: order.len() })
    }

    /// Orientation by walking each component from its smallest dart.
    pub fn orient_by_tracing(&self) -> LinkDiagram {
        let mut out = vec![false; self.twin.len()];
        for strand in self.strands() {
            for d in strand {
                out[d] = true;
            }
        }
        LinkDiagram { orientation: Some(out), ..self.clone() }
    }

    /// Orientation from a signed shading: every edge is directed so that its
    /// black face lies to the left when the face is `+` and to the right
    /// when it is `-`.
    pub fn orient(&self, coloring: &TwoColoring) -> Result<LinkDiagram> {
        let sh = self.shading()?;
        if coloring.plus.len() != sh.black_faces.max(1) {
            return Err(Error::InvalidLink(format!(
                "coloring has {} vertices, diagram has {} black faces",
                coloring.plus.len(),
                sh.black_faces
            )));
        }
        let mut out = vec![false; self.twin.len()];
        for d in self.edges() {
            let t = self.twin[d];
            let (fd, ft) = (sh.face[d], sh.face[t]);
            let forward = if sh.black[fd] {
                coloring.plus[sh.vertex_of[fd].unwrap()]
            } else if sh.black[ft] {
                !coloring.plus[sh.vertex_of[ft].unwrap()]
            } else {
                return Err(Error::Inconsistency("edge between two white faces".into()));
            };
            out[d] = forward;
            out[t] = !forward;
        }
        for c in 0..self.crossing_count() {
            if out[4 * c] == out[4 * c + 2] || out[4 * c + 1] == out[4 * c + 3] {
                return Err(Error::Inconsistency(format!("orientation clashes at crossing {c}")));
            }
        }
        Ok(LinkDiagram { orientation: Some(out), ..self.clone() })
    }

    /// +1 or -1 per crossing; requires an orientation.
    pub fn crossing_signs(&self) -> Result<Vec<i8>> {
        let out = self.orientation.as_ref().ok_or(Error::NotOriented)?;
        Ok((0..self.crossing_count())
            .map(|c| {
                let under_in = if out[4 * c] { 2 } else { 0 };
                let over_in = if out[4 * c + 1] { 3 } else { 1 };
                if over_in == (under_in + 3) % 4 {
                    1
                } else {
                    -1
                }
            })
            .collect())
    }
}

/// The dart continuing a strand that enters its crossing through `d`.
fn straight(d: usize) -> usize {
    4 * (d / 4) + (d + 2) % 4
}

#[derive(Clone, Debug)]
pub struct Shading {
    /// Face to the left of each dart.
    pub face: Vec<usize>,
    pub black: Vec<bool>,
    /// Tait vertex of each black face.
    pub vertex_of: Vec<Option<usize>>,
    pub black_faces: usize,
}

/// Recovers the Tait graph: black faces become vertices, crossings edges.
/// An edge is positive when its black faces sit in sectors 0 and 2.
pub fn checkerboard_tait(l: &LinkDiagram) -> Result<TaitGraph> {
    if l.crossing_count() == 0 {
        return TaitGraph::new(1, Vec::new());
    }
    let sh = l.shading()?;
    let mut edges = Vec::with_capacity(l.crossing_count());
    for c in 0..l.crossing_count() {
        let f = |s: usize| sh.face[4 * c + s];
        let (a, b, sign) = if sh.black[f(0)] { (f(0), f(2), Sign::Pos) } else { (f(1), f(3), Sign::Neg) };
        if !sh.black[a] || !sh.black[b] || sh.black[f(1)] == sh.black[f(0)] {
            return Err(Error::Inconsistency(format!("bad shading around crossing {c}")));
        }
        edges.push(TaitEdge::new(sh.vertex_of[a].unwrap(), sh.vertex_of[b].unwrap(), l.half[c], sign));
    }
    TaitGraph::new(sh.black_faces, edges)
}

/// The link of a binary or ternary element, built from its reduced
/// diagram; binary input goes through ι first.
pub fn build_link(d: &TreeDiagram) -> Result<LinkDiagram> {
    match d.arity().get() {
        2 => build_link_explicit(&morphisms::iota(d)?),
        3 => build_link_explicit(&d.reduce()),
        k => Err(Error::WrongArity { expected: 3, found: k }),
    }
}

/// [`build_link`], then confirms that the checkerboard graph of the result
/// is the Tait graph of `d`.
pub fn build_link_checked(d: &TreeDiagram) -> Result<LinkDiagram> {
    let l = build_link(d)?;
    let want = crate::tait::tait_graph(d)?;
    let got = checkerboard_tait(&l)?;
    if got != want {
        return Err(Error::Inconsistency(format!("checkerboard graph {got} differs from Tait graph {want}")));
    }
    Ok(l)
}

/// The link of exactly this ternary diagram, without reducing it.
///
/// Every node becomes a crossing. A top node lists (parent, child 0,
/// child 1, child 2) counterclockwise, a bottom node (parent, child 2,
/// child 1, child 0); in both the parent and middle child form the under
/// strand. The two roots are joined by an edge running around the left.
pub fn build_link_explicit(d: &TreeDiagram) -> Result<LinkDiagram> {
    if d.arity() != Arity::TERNARY {
        return Err(Error::WrongArity { expected: 3, found: d.arity().get() });
    }
    let n = d.leaf_count();
    if d.top().is_leaf() {
        return Ok(LinkDiagram {
            layout: Some(Layout::default()),
            ..LinkDiagram::unlink(1)
        });
    }

    struct Builder {
        twin: Vec<usize>,
        half: Vec<Half>,
        pos: Vec<Point>,
        leaf_dart: Vec<usize>,
    }
    impl Builder {
        fn add(&mut self, t: &Tree, half: Half, offset: &mut usize) -> (usize, Point) {
            let c = self.half.len();
            self.half.push(half);
            self.twin.extend([usize::MAX; 4]);
            self.pos.push((0.0, 0.0));
            let mut lo = f64::MAX;
            let mut hi = f64::MIN;
            let mut height: f64 = 0.0;
            for (j, child) in t.children().iter().enumerate() {
                let slot = match half {
                    Half::Upper => 1 + j,
                    Half::Lower => 3 - j,
                };
                let d = 4 * c + slot;
                let x = match child {
                    Tree::Leaf => {
                        self.leaf_dart[*offset] = d;
                        *offset += 1;
                        (*offset - 1) as f64
                    }
                    Tree::Node(_) => {
                        let (up, p) = self.add(child, half, offset);
                        self.twin[d] = up;
                        self.twin[up] = d;
                        height = height.max(p.1.abs());
                        p.0
                    }
                };
                lo = lo.min(x);
                hi = hi.max(x);
            }
            let y = height + 1.0;
            let p = ((lo + hi) / 2.0, if half == Half::Upper { y } else { -y });
            self.pos[c] = p;
            (4 * c, p)
        }
    }

    let mut b = Builder { twin: Vec::new(), half: Vec::new(), pos: Vec::new(), leaf_dart: vec![0; n] };
    let (top_root, top_p) = b.add(d.top(), Half::Upper, &mut 0);
    let top_leaves = std::mem::replace(&mut b.leaf_dart, vec![0; n]);
    let (bottom_root, bot_p) = b.add(d.bottom(), Half::Lower, &mut 0);
    let bottom_leaves = std::mem::take(&mut b.leaf_dart);
    let mut twin = b.twin;
    twin[top_root] = bottom_root;
    twin[bottom_root] = top_root;

    let mut via = vec![Vec::new(); twin.len()];
    for (i, (&u, &w)) in top_leaves.iter().zip(&bottom_leaves).enumerate() {
        twin[u] = w;
        twin[w] = u;
        via[u] = vec![(i as f64, 0.0)];
        via[w] = vec![(i as f64, 0.0)];
    }
    let (top_y, bot_y) = (top_p.1 + 1.0, bot_p.1 - 1.0);
    via[bottom_root] = vec![(bot_p.0, bot_y), (-1.0, bot_y), (-1.0, 0.0), (-1.0, top_y), (top_p.0, top_y)];
    via[top_root] = via[bottom_root].iter().rev().copied().collect();

    let mut axis = vec![bottom_root];
    axis.extend(&bottom_leaves);
    Ok(LinkDiagram {
        twin,
        half: b.half,
        free_loops: 0,
        axis,
        orientation: None,
        layout: Some(Layout { crossings: b.pos, via }),
    })
}

/// The link of a positive element of F given by its top tree: the bottom
/// tree is the right vine with the same number of leaves.
pub fn link_of_positive(t: &Tree) -> Result<LinkDiagram> {
    t.check_arity(Arity::BINARY)?;
    let comb = Tree::right_vine(Arity::BINARY, t.leaf_count());
    build_link(&TreeDiagram::new(t.clone(), comb, Arity::BINARY)?)
}

/// The oriented link of an element of an oriented subgroup.
pub fn oriented_link(d: &TreeDiagram) -> Result<std::result::Result<LinkDiagram, crate::tait::OddCycle>> {
    let l = build_link(d)?;
    let g = checkerboard_tait(&l)?;
    match crate::tait::two_color(&g) {
        Ok(c) => Ok(Ok(orient_link(&l, &c)?)),
        Err(cycle) => Ok(Err(cycle)),
    }
}

pub fn orient_link(l: &LinkDiagram, c: &TwoColoring) -> Result<LinkDiagram> {
    l.orient(c)
}

/// The medial link of a Tait graph: one crossing per edge, placed at the
/// top (or bottom) of the edge's arc, with the chirality given by its sign.
pub fn medial_link(g: &TaitGraph) -> Result<LinkDiagram> {
    let edges = g.edges();
    if let Some(e) = edges.iter().find(|e| e.left == e.right) {
        return Err(Error::InvalidTaitGraph(format!("loop at v{}", e.left)));
    }
    let m = edges.len();
    if m == 0 {
        let k = g.vertex_count();
        return Ok(LinkDiagram { layout: Some(Layout::default()), ..LinkDiagram::unlink(k) });
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Compass {
        NE,
        NW,
        SW,
        SE,
    }
    let slot = |e: usize, c: Compass| -> usize {
        let s = match (edges[e].sign, c) {
            (Sign::Pos, Compass::NW) | (Sign::Neg, Compass::NE) => 0,
            (Sign::Pos, Compass::SW) | (Sign::Neg, Compass::NW) => 1,
            (Sign::Pos, Compass::SE) | (Sign::Neg, Compass::SW) => 2,
            (Sign::Pos, Compass::NE) | (Sign::Neg, Compass::SE) => 3,
        };
        4 * e + s
    };
    // (edge, at left end?) -> slots on the dart's left and right.
    let left_of = |e: usize, at_left: bool| slot(e, if at_left { Compass::NW } else { Compass::SE });
    let right_of = |e: usize, at_left: bool| slot(e, if at_left { Compass::SW } else { Compass::NE });

    let n = g.vertex_count();
    let mut around: Vec<Vec<(usize, bool, (u8, i64, i64))>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        let idx = i as i64;
        let (l, r) = (e.left as i64, e.right as i64);
        // Counterclockwise from east; parallel edges nest with lower index inside.
        let (kl, kr) = match e.half {
            Half::Upper => ((0, r, idx), (1, l, -idx)),
            Half::Lower => ((3, -r, -idx), (2, -l, idx)),
        };
        around[e.left].push((i, true, kl));
        around[e.right].push((i, false, kr));
    }

    let mut twin = vec![usize::MAX; 4 * m];
    let mut via = vec![Vec::new(); 4 * m];
    let mut free_loops = 0;
    let mut axis = Vec::new();
    let mut axis_ok = true;
    for (v, darts) in around.iter_mut().enumerate() {
        darts.sort_by_key(|x| x.2);
        if darts.is_empty() {
            free_loops += 1;
            axis_ok = false;
            continue;
        }
        let k = darts.len();
        let mut west = None;
        let mut east = None;
        for i in 0..k {
            let (e1, l1, key1) = darts[i];
            let (e2, l2, key2) = darts[(i + 1) % k];
            let a = left_of(e1, l1);
            let b = right_of(e2, l2);
            twin[a] = b;
            twin[b] = a;
            let corner = corner_point(v as f64, key1.0, key2.0, k == 1);
            via[a] = vec![corner];
            via[b] = vec![corner];
            let upper = |g: u8| g < 2;
            if upper(key1.0) && !upper(key2.0) {
                west = Some(b);
            }
            if !upper(key1.0) && upper(key2.0) {
                east = Some(a);
            }
        }
        match (west, east) {
            (Some(w), Some(e)) => axis.extend([w, e]),
            _ => axis_ok = false,
        }
    }
    let crossings = edges
        .iter()
        .map(|e| {
            let mid = (e.left + e.right) as f64 / 2.0;
            let r = (e.right - e.left) as f64 / 2.0;
            (mid, if e.half == Half::Upper { r } else { -r })
        })
        .collect();
    Ok(LinkDiagram {
        twin,
        half: edges.iter().map(|e| e.half).collect(),
        free_loops,
        axis: if axis_ok { axis } else { Vec::new() },
        orientation: None,
        layout: Some(Layout { crossings, via }),
    })
}

/// A point near vertex `x` in the corner between two ccw groups.
fn corner_point(x: f64, from: u8, to: u8, full_turn: bool) -> Point {
    let angle = |g: u8| match g {
        0 => 60f64,
        1 => 120.0,
        2 => 240.0,
        _ => 300.0,
    };
    let (a, mut b) = (angle(from), angle(to));
    if b < a || full_turn {
        b += 360.0;
    }
    let mid = ((a + b) / 2.0).to_radians();
    (x + 0.3 * mid.cos(), 0.3 * mid.sin())
}

/// The link of an element; binary elements go through ι.
pub fn link_of(d: &TreeDiagram) -> Result<LinkDiagram> {
    build_link(d)
}
