//! Half-edge representation of a connected or disconnected plane graph.
//!
//! Darts are numbered consecutively per vertex, in counterclockwise order.
//! Every dart is paired with its twin at the other end of its edge.

#[derive(Clone, Debug, Default)]
pub struct PlanarMap {
    twin: Vec<usize>,
    vertex: Vec<usize>,
    first: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl PlanarMap {
    pub fn new() -> PlanarMap {
        PlanarMap::default()
    }

    /// Adds a vertex of the given degree; returns its first dart. The
    /// remaining darts follow counterclockwise.
    pub fn add_vertex(&mut self, degree: usize) -> usize {
        assert!(degree > 0);
        let base = self.twin.len();
        let v = self.first.len();
        self.first.push(base);
        for _ in 0..degree {
            self.twin.push(UNSET);
            self.vertex.push(v);
        }
        base
    }

    pub fn connect(&mut self, a: usize, b: usize) {
        assert!(self.twin[a] == UNSET && self.twin[b] == UNSET && a != b, "dart reused");
        self.twin[a] = b;
        self.twin[b] = a;
    }

    pub fn is_complete(&self) -> bool {
        self.twin.iter().all(|&t| t != UNSET)
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn vertex(&self, d: usize) -> usize {
        self.vertex[d]
    }

    fn degree(&self, v: usize) -> usize {
        let end = self.first.get(v + 1).copied().unwrap_or(self.twin.len());
        end - self.first[v]
    }

    pub fn next_ccw(&self, d: usize) -> usize {
        let v = self.vertex[d];
        let (b, k) = (self.first[v], self.degree(v));
        b + (d - b + 1) % k
    }

    pub fn prev_ccw(&self, d: usize) -> usize {
        let v = self.vertex[d];
        let (b, k) = (self.first[v], self.degree(v));
        b + (d - b + k - 1) % k
    }

    /// The next dart along the boundary of the face lying to the left of `d`.
    pub fn face_next(&self, d: usize) -> usize {
        self.prev_ccw(self.twin[d])
    }

    /// Labels every dart with the face on its left. Returns the labels and
    /// the number of faces.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        debug_assert!(self.is_complete());
        let mut face = vec![UNSET; self.twin.len()];
        let mut count = 0;
        for start in 0..self.twin.len() {
            if face[start] != UNSET {
                continue;
            }
            let mut d = start;
            while face[d] == UNSET {
                face[d] = count;
                d = self.face_next(d);
            }
            count += 1;
        }
        (face, count)
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let n = self.first.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for d in self.first[v]..self.first[v] + self.degree(v) {
                    let w = self.vertex[self.twin[d]];
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Euler's formula with faces traced per component: V − E + F = 2C.
    pub fn is_planar(&self) -> bool {
        let (_, f) = self.faces();
        self.vertex_count() + f == self.dart_count() / 2 + 2 * self.components()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_graph_has_three_faces() {
        let mut m = PlanarMap::new();
        let a = m.add_vertex(3);
        let b = m.add_vertex(3);
        // Three parallel edges; b sees them in the reverse cyclic order.
        m.connect(a, b);
        m.connect(a + 1, b + 2);
        m.connect(a + 2, b + 1);
        let (_, f) = m.faces();
        assert_eq!(f, 3);
        let mut twisted = PlanarMap::new();
        let a = twisted.add_vertex(3);
        let b = twisted.add_vertex(3);
        twisted.connect(a, b + 2);
        twisted.connect(a + 1, b);
        twisted.connect(a + 2, b + 1);
        assert!(!twisted.is_planar());
        assert!(m.is_planar());
    }

    #[test]
    fn single_loop_edge() {
        let mut m = PlanarMap::new();
        let a = m.add_vertex(2);
        m.connect(a, a + 1);
        assert_eq!(m.faces().1, 2);
        assert!(m.is_planar());
        assert_eq!(m.next_ccw(a + 1), a);
        assert_eq!(m.prev_ccw(a), a + 1);
    }
}
