//! Helpers and independent reference computations shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use thompson_knots::tait::{Half, Sign, TaitEdge};
use thompson_knots::word::{word_to_diagram, Letter, Symbol};
use thompson_knots::{Arity, GeneratorWord, LaurentPoly, TaitGraph, Tree, TreeDiagram};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn parse(w: &str, arity: Arity) -> TreeDiagram {
    word_to_diagram(&w.parse::<GeneratorWord>().unwrap(), arity).unwrap()
}

pub fn f(w: &str) -> TreeDiagram {
    parse(w, Arity::BINARY)
}

pub fn f3(w: &str) -> TreeDiagram {
    parse(w, Arity::TERNARY)
}

pub fn f4(w: &str) -> TreeDiagram {
    parse(w, Arity::QUATERNARY)
}

/// A word of length at most `max_len` in `x_i^±1` (or `y_i^±1`) with
/// `i <= max_index`.
pub fn random_word(rng: &mut impl Rng, symbol: Symbol, max_index: u32, max_len: usize) -> GeneratorWord {
    let len = rng.gen_range(0..=max_len);
    GeneratorWord::from_letters((0..len).map(|_| {
        let exp = if rng.gen_bool(0.5) { 1 } else { -1 };
        Letter::new(symbol, rng.gen_range(0..=max_index), exp)
    }))
}

pub fn random_f(rng: &mut impl Rng, max_len: usize) -> TreeDiagram {
    word_to_diagram(&random_word(rng, Symbol::X, 6, max_len), Arity::BINARY).unwrap()
}

pub fn random_fk(rng: &mut impl Rng, arity: Arity, max_len: usize) -> TreeDiagram {
    word_to_diagram(&random_word(rng, Symbol::Y, 6, max_len), arity).unwrap()
}

/// A random product of `len` factors, each a generator or its inverse.
pub fn random_product(rng: &mut impl Rng, gens: &[TreeDiagram], len: usize) -> TreeDiagram {
    let mut acc = TreeDiagram::identity(gens[0].arity());
    for _ in 0..len {
        let g = &gens[rng.gen_range(0..gens.len())];
        let g = if rng.gen_bool(0.5) { g.clone() } else { g.invert() };
        acc = acc.multiply(&g).unwrap();
    }
    acc
}

pub fn oriented_generators() -> Vec<TreeDiagram> {
    ["x0 x1", "x1 x2", "x2 x3"].map(f).to_vec()
}

pub fn ternary_oriented_generators() -> Vec<TreeDiagram> {
    (0..3)
        .flat_map(|i| {
            [
                format!("y{}^2", 2 * i + 1),
                format!("y{} y{}", 2 * i, 2 * i + 2),
                format!("y{} y{}", 2 * i, 2 * i + 3),
            ]
        })
        .map(|w| f3(&w))
        .collect()
}

pub fn w_generators() -> Vec<TreeDiagram> {
    ["x0^2 x1 x2^-1", "x0 x1^2 x0^-1", "x1^2 x3 x2^-1", "x2^2 x3 x4^-1"].map(f).to_vec()
}

/// Leaf addresses read off a tree by walking it directly.
fn addresses(t: &Tree, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    match t {
        Tree::Leaf => out.push(prefix.clone()),
        Tree::Node(c) => {
            for (i, child) in c.iter().enumerate() {
                prefix.push(i as u8);
                addresses(child, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// The Tait graph of a binary diagram from leaf addresses: the edge of a
/// half ending at gap j starts at the first leaf below the deepest common
/// ancestor of leaves j-1 and j.
pub fn tait_by_addresses(d: &TreeDiagram) -> TaitGraph {
    let d = d.reduce();
    let mut edges = Vec::new();
    for (t, half, sign) in [(d.top(), Half::Upper, Sign::Pos), (d.bottom(), Half::Lower, Sign::Neg)] {
        let mut a = Vec::new();
        addresses(t, &mut Vec::new(), &mut a);
        for j in 1..a.len() {
            let common = a[j - 1].iter().zip(&a[j]).take_while(|(x, y)| x == y).count();
            let prefix = &a[j][..common];
            let left = a.iter().position(|w| w.starts_with(prefix)).unwrap();
            edges.push(TaitEdge::new(left, j, half, sign));
        }
    }
    TaitGraph::new(d.leaf_count(), edges).unwrap()
}

/// The PL map of a diagram applied to `num / base^k`, by locating the leaf
/// interval of the top tree and rescaling onto the bottom one. The result
/// is `(numerator, exponent)` in lowest terms over powers of the base.
pub fn pl_eval(d: &TreeDiagram, num: u128, k: u32) -> (u128, u32) {
    let base = d.arity().get() as u128;
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    addresses(d.top(), &mut Vec::new(), &mut top);
    addresses(d.bottom(), &mut Vec::new(), &mut bottom);
    let deep = top.iter().chain(&bottom).map(Vec::len).max().unwrap() as u32;
    let e = k + 2 * deep;
    let scale = |n: u128, from: u32| n * base.pow(e - from);
    let t = scale(num, k);
    let start = |w: &[u8]| scale(w.iter().fold(0u128, |a, &x| a * base + x as u128), w.len() as u32);
    for (u, v) in top.iter().zip(&bottom) {
        let (a, len) = (start(u), base.pow(e - u.len() as u32));
        if t >= a && t < a + len {
            // image = b + (t - a) * base^(|u| - |v|)
            let off = t - a;
            let (mut n, mut ex) = if u.len() >= v.len() {
                (start(v) + off * base.pow((u.len() - v.len()) as u32), e)
            } else {
                (start(v) * base.pow((v.len() - u.len()) as u32) + off, e + (v.len() - u.len()) as u32)
            };
            while ex > 0 && n % base == 0 {
                n /= base;
                ex -= 1;
            }
            return (n, ex);
        }
    }
    unreachable!("point outside [0,1)")
}

/// The standard four-crossing diagram of the figure-eight knot.
pub const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

/// Kauffman bracket straight from PD labels: every state joins slot pairs
/// (0,1),(2,3) for an A-smoothing or (0,3),(1,2) for a B-smoothing and the
/// loops are the classes of slot ends glued along labels.
pub fn pd_bracket(quads: &[[u32; 4]]) -> BTreeMap<i32, i64> {
    let n = quads.len();
    let mut out = BTreeMap::new();
    for state in 0u32..1 << n {
        let mut parent: Vec<usize> = (0..4 * n).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        let unite = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (root(p, a), root(p, b));
            p[ra] = rb;
        };
        for i in 0..4 * n {
            for j in i + 1..4 * n {
                if quads[i / 4][i % 4] == quads[j / 4][j % 4] {
                    unite(&mut parent, i, j);
                }
            }
        }
        let mut a = 0;
        for c in 0..n {
            let pairs = if state >> c & 1 == 1 {
                a += 1;
                [(0, 1), (2, 3)]
            } else {
                [(0, 3), (1, 2)]
            };
            for (x, y) in pairs {
                unite(&mut parent, 4 * c + x, 4 * c + y);
            }
        }
        let loops = (0..4 * n).filter(|&i| root(&mut parent, i) == i).count();
        // A^(a-b) * (-A^2 - A^-2)^(loops-1)
        let mut poly: BTreeMap<i32, i64> = BTreeMap::from([(a - (n as i32 - a), 1)]);
        for _ in 1..loops {
            let mut next = BTreeMap::new();
            for (&e, &c) in &poly {
                *next.entry(e + 2).or_insert(0) -= c;
                *next.entry(e - 2).or_insert(0) -= c;
            }
            poly = next;
        }
        for (e, c) in poly {
            *out.entry(e).or_insert(0) += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Writhe of a one-component PD code whose labels run consecutively along
/// the knot.
pub fn pd_writhe(quads: &[[u32; 4]]) -> i64 {
    let m = 2 * quads.len() as u32;
    let next = |l: u32| l % m + 1;
    quads
        .iter()
        .map(|&[a, b, c, d]| {
            let under_in = if c == next(a) { 0 } else { 2 };
            let over_in = if d == next(b) { 1 } else { 3 };
            if over_in == (under_in + 3) % 4 {
                1
            } else {
                -1
            }
        })
        .sum()
}

pub fn pd_jones(quads: &[[u32; 4]]) -> LaurentPoly {
    let w = pd_writhe(quads);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    LaurentPoly::from_terms(pd_bracket(quads).into_iter().map(|(e, c)| (sign * c, e - 3 * w as i32)))
}

pub fn figure_eight_jones() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 8), (-1, 4), (1, 0), (-1, -4), (1, -8)])
}
