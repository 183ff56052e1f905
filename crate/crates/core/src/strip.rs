//! 3-colorings of the regions of a binary tree diagram drawn in a strip.
//!
//! The top tree hangs from the upper boundary line by its root stem, the
//! bottom tree stands on the lower one, and leaf i of both trees is joined
//! across the middle. Closing the strip into a rectangle makes every region
//! a bounded face; region i is the one between leaves i-1 and i.

use std::fmt;

use crate::error::{Error, Result};
use crate::planar::PlanarMap;
use crate::tree::{Tree, TreeDiagram};
use crate::word::require_binary;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StripColoring {
    /// Color in ℤ₃ of each region, left to right.
    pub colors: Vec<u8>,
}

impl fmt::Display for StripColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.colors.iter().map(u8::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// The region where propagation first met two equal colors around a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripConflict {
    pub region: usize,
}

impl fmt::Display for StripConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "color conflict at region {}", self.region)
    }
}

struct Strip {
    map: PlanarMap,
    /// Darts of the three edges at every internal node; the top root first.
    triangles: Vec<[usize; 3]>,
    /// Downward dart of the edge through leaf i.
    leaf_darts: Vec<usize>,
    outer_dart: usize,
}

/// Adds one vertex per internal node. `order` gives the ccw position of
/// (parent, child 0, child 1). Returns the dart leading up to the root
/// (or the root leaf's dart, for a single leaf) and records leaf darts.
fn add_tree(
    map: &mut PlanarMap,
    t: &Tree,
    order: [usize; 3],
    leaves: &mut Vec<usize>,
    triangles: &mut Vec<[usize; 3]>,
) -> Option<usize> {
    match t {
        Tree::Leaf => None,
        Tree::Node(c) => {
            let base = map.add_vertex(3);
            let dart = |j: usize| base + order[j];
            triangles.push([dart(0), dart(1), dart(2)]);
            for (j, child) in c.iter().enumerate() {
                match add_tree(map, child, order, leaves, triangles) {
                    Some(up) => map.connect(dart(j + 1), up),
                    None => leaves.push(dart(j + 1)),
                }
            }
            Some(dart(0))
        }
    }
}

fn build(d: &TreeDiagram) -> Strip {
    let mut map = PlanarMap::new();
    let mut triangles = Vec::new();
    let mut top_leaves = Vec::new();
    let mut bottom_leaves = Vec::new();
    // Top nodes: parent north, children south-west and south-east.
    let top_root = add_tree(&mut map, d.top(), [0, 1, 2], &mut top_leaves, &mut triangles);
    // Bottom nodes: parent south, then north-east (child 1), north-west (child 0).
    let bottom_root = add_tree(&mut map, d.bottom(), [0, 2, 1], &mut bottom_leaves, &mut triangles);

    // Boundary points, darts counterclockwise from east.
    let p_top = map.add_vertex(3); // east, west, south
    let p_bot = map.add_vertex(3); // east, north, west
    let tl = map.add_vertex(2); // east, south
    let tr = map.add_vertex(2); // west, south
    let bl = map.add_vertex(2); // east, north
    let br = map.add_vertex(2); // north, west

    match top_root {
        Some(r) => map.connect(p_top + 2, r),
        None => top_leaves.push(p_top + 2),
    }
    match bottom_root {
        Some(r) => map.connect(p_bot + 1, r),
        None => bottom_leaves.push(p_bot + 1),
    }
    for (&a, &b) in top_leaves.iter().zip(&bottom_leaves) {
        map.connect(a, b);
    }
    map.connect(p_top, tr);
    map.connect(p_top + 1, tl);
    map.connect(tl + 1, bl + 1);
    map.connect(bl, p_bot + 2);
    map.connect(p_bot, br + 1);
    map.connect(br, tr + 1);
    debug_assert!(map.is_complete());
    Strip { map, triangles, leaf_darts: top_leaves, outer_dart: bl + 1 }
}

/// Colors the regions starting from the root convention (left of the top
/// stem 0, right of it 1, below the top root 2) and forcing the third color
/// around every node.
pub fn strip_three_color(d: &TreeDiagram) -> Result<std::result::Result<StripColoring, StripConflict>> {
    require_binary(d)?;
    let d = d.reduce();
    let strip = build(&d);
    let (face, face_count) = strip.map.faces();

    let mut region = vec![usize::MAX; face_count];
    for (i, &dart) in strip.leaf_darts.iter().enumerate() {
        for (f, r) in [(face[dart], i + 1), (face[strip.map.twin(dart)], i)] {
            if region[f] != usize::MAX && region[f] != r {
                return Err(Error::Inconsistency(format!("strip face spans regions {} and {r}", region[f])));
            }
            region[f] = r;
        }
    }
    let outer = face[strip.outer_dart];
    let regions = d.leaf_count() + 1;
    if face_count != regions + 1 || region[outer] != usize::MAX {
        return Err(Error::Inconsistency("strip faces do not match the regions".into()));
    }

    let mut color: Vec<Option<u8>> = vec![None; regions];
    match strip.triangles.first() {
        Some(root) => {
            // Left of the stem, between the children, right of the stem.
            color[region[face[root[0]]]] = Some(0);
            color[region[face[root[1]]]] = Some(2);
            color[region[face[root[2]]]] = Some(1);
        }
        None => {
            color[0] = Some(0);
            color[1] = Some(1);
        }
    }
    let tri: Vec<[usize; 3]> =
        strip.triangles.iter().map(|t| t.map(|dart| region[face[dart]])).collect();
    loop {
        let mut changed = false;
        for t in &tri {
            let known: Vec<(usize, u8)> = t.iter().filter_map(|&r| color[r].map(|c| (r, c))).collect();
            for a in 0..known.len() {
                for b in a + 1..known.len() {
                    if known[a].1 == known[b].1 {
                        return Ok(Err(StripConflict { region: known[b].0 }));
                    }
                }
            }
            if known.len() == 2 {
                let missing = t.iter().copied().find(|&r| color[r].is_none()).unwrap();
                color[missing] = Some(3 - known[0].1 - known[1].1);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    match color.iter().position(Option::is_none) {
        Some(r) => Err(Error::Inconsistency(format!("region {r} left uncolored"))),
        None => Ok(Ok(StripColoring { colors: color.into_iter().map(Option::unwrap).collect() })),
    }
}
