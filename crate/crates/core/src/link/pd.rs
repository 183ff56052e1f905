use std::fmt;

use super::LinkDiagram;

/// Planar diagram code: one `X(a,b,c,d)` per crossing, listing edge labels
/// counterclockwise from an under-strand slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
    pub loops: usize,
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.crossings.len();
        writeln!(f, "arcs={} crossings={}", 2 * n, n)?;
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X({a},{b},{c},{d})")?;
        }
        if self.loops > 0 {
            writeln!(f, "loops={}", self.loops)?;
        }
        Ok(())
    }
}

/// Breadth-first labelling from one crossing and one of its under slots.
/// A crossing first reached through an over slot is read from the under
/// slot just before it.
fn traverse(l: &LinkDiagram, start: usize, base: usize, crossings: usize) -> Vec<[u32; 4]> {
    let mut label = vec![0u32; 4 * crossings];
    let mut base_of = vec![usize::MAX; crossings];
    let mut queue = std::collections::VecDeque::new();
    let mut next = 1;
    let mut out = Vec::new();
    base_of[start] = base;
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        let b = base_of[c];
        let mut quad = [0; 4];
        for (j, q) in quad.iter_mut().enumerate() {
            let d = 4 * c + (b + j) % 4;
            if label[d] == 0 {
                label[d] = next;
                label[l.twin(d)] = next;
                next += 1;
            }
            *q = label[d];
        }
        out.push(quad);
        for j in 0..4 {
            let t = l.twin(4 * c + (b + j) % 4);
            let c2 = t / 4;
            if base_of[c2] == usize::MAX {
                let s = t % 4;
                base_of[c2] = if s % 2 == 0 { s } else { (s + 3) % 4 };
                queue.push_back(c2);
            }
        }
    }
    out
}

/// Canonical PD code: each connected piece is labelled from the start that
/// gives the lexicographically smallest code, and pieces are sorted.
pub fn canonical_pd(l: &LinkDiagram) -> PdCode {
    let n = l.crossing_count();
    let mut piece = vec![usize::MAX; n];
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if piece[s] != usize::MAX {
            continue;
        }
        let id = pieces.len();
        let mut members = vec![s];
        piece[s] = id;
        let mut i = 0;
        while i < members.len() {
            let c = members[i];
            for d in 4 * c..4 * c + 4 {
                let c2 = l.twin(d) / 4;
                if piece[c2] == usize::MAX {
                    piece[c2] = id;
                    members.push(c2);
                }
            }
            i += 1;
        }
        pieces.push(members);
    }

    let mut codes: Vec<Vec<[u32; 4]>> = pieces
        .iter()
        .map(|members| {
            members
                .iter()
                .flat_map(|&c| [0, 2].map(|b| traverse(l, c, b, n)))
                .min()
                .unwrap()
        })
        .collect();
    codes.sort();
    let mut offset = 0;
    let mut crossings = Vec::with_capacity(n);
    for code in codes {
        let k = code.len() as u32;
        crossings.extend(code.into_iter().map(|q| q.map(|x| x + offset)));
        offset += 2 * k;
    }
    PdCode { crossings, loops: l.free_loops() }
}
