//! The piecewise-linear action on finite k-ary expansions, digit weights and
//! the sets S, S_i and Z they define.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tree::{Tree, TreeDiagram};
use crate::word::require_binary;

/// A point `0.a₁a₂…aₙ` in base 2, 3 or 4, kept in canonical form (last digit
/// non-zero). The empty word would be 0 and is never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitWord {
    base: u8,
    digits: Vec<u8>,
}

impl DigitWord {
    pub fn new(base: u8, mut digits: Vec<u8>) -> Result<DigitWord> {
        if !(2..=4).contains(&base) {
            return Err(Error::UnsupportedArity(base as usize));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::PointSyntax(format!("digit {d} in base {base}")));
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        if digits.is_empty() {
            return Err(Error::PointOutOfRange);
        }
        Ok(DigitWord { base, digits })
    }

    /// Accepts `0.d₁d₂…` in the given base, or an exact fraction `a/2^k`,
    /// `a/3^k`; a fraction's denominator must match `base`.
    pub fn parse(text: &str, base: u8) -> Result<DigitWord> {
        let text = text.trim();
        let bad = || Error::PointSyntax(text.to_string());
        if let Some((num, den)) = text.split_once('/') {
            let (b, k) = den.split_once('^').ok_or_else(bad)?;
            let b: u8 = b.parse().map_err(|_| bad())?;
            let k: u32 = k.parse().map_err(|_| bad())?;
            if b != base {
                return Err(Error::WrongBase { expected: base, found: b });
            }
            let mut a: u128 = num.parse().map_err(|_| bad())?;
            let scale = (b as u128).checked_pow(k).ok_or_else(bad)?;
            if a == 0 || a >= scale {
                return Err(Error::PointOutOfRange);
            }
            let mut digits = vec![0u8; k as usize];
            for slot in digits.iter_mut().rev() {
                *slot = (a % b as u128) as u8;
                a /= b as u128;
            }
            return DigitWord::new(base, digits);
        }
        let frac = text.strip_prefix("0.").or_else(|| text.strip_prefix('.')).ok_or_else(|| {
            if text == "0" || text == "1" {
                Error::PointOutOfRange
            } else {
                bad()
            }
        })?;
        let digits = frac
            .bytes()
            .map(|c| if c.is_ascii_digit() { Ok(c - b'0') } else { Err(bad()) })
            .collect::<Result<Vec<u8>>>()?;
        DigitWord::new(base, digits)
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Numerator and exponent of `self = a / base^k`.
    pub fn to_fraction(&self) -> (u128, u32) {
        let a = self.digits.iter().fold(0u128, |acc, &d| acc * self.base as u128 + d as u128);
        (a, self.digits.len() as u32)
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("0.")?;
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Prefix-code view of a tree diagram: walking the top tree along the digits
/// of a point finds the leaf, and the bottom branch of the same leaf is
/// written in its place.
#[derive(Clone, Debug)]
pub struct BranchMap {
    base: u8,
    /// Flattened top tree; entries `>= 0` are node indices, `< 0` encode
    /// leaf `!entry`.
    nodes: Vec<Vec<i32>>,
    bottom: Vec<Vec<u8>>,
}

impl BranchMap {
    pub fn new(d: &TreeDiagram) -> BranchMap {
        fn flatten(t: &Tree, nodes: &mut Vec<Vec<i32>>, leaf: &mut i32) -> i32 {
            match t {
                Tree::Leaf => {
                    *leaf += 1;
                    !(*leaf - 1)
                }
                Tree::Node(c) => {
                    let me = nodes.len();
                    nodes.push(Vec::new());
                    let kids = c.iter().map(|x| flatten(x, nodes, leaf)).collect();
                    nodes[me] = kids;
                    me as i32
                }
            }
        }
        let mut nodes = Vec::new();
        let root = flatten(d.top(), &mut nodes, &mut 0);
        if root < 0 {
            nodes.push(vec![root]);
        }
        BranchMap { base: d.arity().get() as u8, nodes, bottom: d.bottom().branch_words() }
    }

    /// Image of the (not necessarily canonical) digit string `t`, appended
    /// to `out` without canonicalizing.
    pub fn apply_into(&self, t: &[u8], out: &mut Vec<u8>) {
        if self.nodes.len() == 1 && self.nodes[0].len() == 1 {
            out.extend_from_slice(t);
            return;
        }
        let mut node = 0usize;
        let mut depth = 0;
        loop {
            let digit = t.get(depth).copied().unwrap_or(0) as usize;
            depth += 1;
            let next = self.nodes[node][digit];
            if next < 0 {
                out.extend_from_slice(&self.bottom[!next as usize]);
                if depth < t.len() {
                    out.extend_from_slice(&t[depth..]);
                }
                return;
            }
            node = next as usize;
        }
    }

    pub fn apply(&self, t: &DigitWord) -> Result<DigitWord> {
        if t.base != self.base {
            return Err(Error::WrongBase { expected: self.base, found: t.base });
        }
        let mut out = Vec::with_capacity(t.digits.len() + 8);
        self.apply_into(&t.digits, &mut out);
        DigitWord::new(self.base, out)
    }
}

/// Image of `t` under the element `d`.
pub fn evaluate(d: &TreeDiagram, t: &DigitWord) -> Result<DigitWord> {
    BranchMap::new(d).apply(t)
}

/// ω: digit sum mod 2.
pub fn weight_w2(digits: &[u8]) -> u8 {
    (digits.iter().map(|&d| d as u32).sum::<u32>() % 2) as u8
}

/// Σ (-1)^i a_i mod 3, digits numbered from 1.
pub fn weight_w3alt(digits: &[u8]) -> u8 {
    let s: i64 = digits
        .iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { -(d as i64) } else { d as i64 })
        .sum();
    s.rem_euclid(3) as u8
}

/// Ternary weight: split the word at its 1s into w₁ 1 w₂ 1 … 1 wₙ and count
/// every 1, every 2 in an odd-numbered piece and every 0 in an even-numbered
/// piece.
pub fn weight_c(digits: &[u8]) -> u32 {
    let mut odd = true;
    let mut c = 0;
    for &d in digits {
        match d {
            1 => {
                c += 1;
                odd = !odd;
            }
            2 if odd => c += 1,
            0 if !odd => c += 1,
            _ => {}
        }
    }
    c
}

pub fn in_s(digits: &[u8]) -> bool {
    weight_w2(digits) == 0
}

pub fn in_si(digits: &[u8], i: u8) -> bool {
    weight_w3alt(digits) == i % 3
}

pub fn in_z(digits: &[u8]) -> bool {
    digits.iter().filter(|&&d| d == 1).count() % 2 == 0 && weight_c(digits) % 2 == 0
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum StabilizedSet {
    S,
    Si(u8),
    Z,
}

impl StabilizedSet {
    pub fn base(self) -> u8 {
        match self {
            StabilizedSet::Z => 3,
            _ => 2,
        }
    }

    pub fn contains(self, digits: &[u8]) -> bool {
        match self {
            StabilizedSet::S => in_s(digits),
            StabilizedSet::Si(i) => in_si(digits, i),
            StabilizedSet::Z => in_z(digits),
        }
    }
}

/// Checks `t ∈ set ⇔ d(t) ∈ set` for every canonical word of length at most
/// `depth`. Passing is necessary for `d` to stabilize the set.
pub fn sampled_stabilizer_check(d: &TreeDiagram, set: StabilizedSet, depth: usize) -> Result<bool> {
    if d.arity().get() as u8 != set.base() {
        return Err(Error::WrongBase { expected: set.base(), found: d.arity().get() as u8 });
    }
    let map = BranchMap::new(d);
    let base = set.base();

    fn rec(map: &BranchMap, set: StabilizedSet, t: &mut Vec<u8>, depth: usize, buf: &mut Vec<u8>) -> bool {
        if t.last().is_some_and(|&x| x != 0) {
            buf.clear();
            map.apply_into(t, buf);
            if set.contains(t) != set.contains(buf) {
                return false;
            }
        }
        if t.len() == depth {
            return true;
        }
        for digit in 0..map.base {
            t.push(digit);
            let ok = rec(map, set, t, depth, buf);
            t.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    let split = depth.min(3);
    let mut prefixes: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..split {
        prefixes = prefixes
            .into_iter()
            .flat_map(|p| (0..base).map(move |x| [p.as_slice(), &[x]].concat()))
            .collect();
    }
    // Shorter words are covered by checking every prefix on the way down.
    let shallow_ok = {
        let mut t = Vec::new();
        let mut buf = Vec::new();
        rec(&map, set, &mut t, split.saturating_sub(1), &mut buf)
    };
    Ok(shallow_ok
        && prefixes.into_par_iter().all(|mut p| {
            let mut buf = Vec::new();
            rec(&map, set, &mut p, depth, &mut buf)
        }))
}

/// ω(u) = ω(v) for every pair of corresponding branches; exactly the
/// condition for the element to map S onto itself.
pub fn branch_parity_test(d: &TreeDiagram) -> Result<bool> {
    require_binary(d)?;
    let d = d.reduce();
    Ok(d.top()
        .branch_words()
        .iter()
        .zip(d.bottom().branch_words())
        .all(|(u, v)| weight_w2(u) == weight_w2(&v)))
}

/// ω₃(u) = ω₃(v) and |u| ≡ |v| (mod 2) for every branch pair; the
/// condition for the element to fix every S_i.
pub fn branch_mod3_test(d: &TreeDiagram) -> Result<bool> {
    require_binary(d)?;
    let d = d.reduce();
    Ok(d.top()
        .branch_words()
        .iter()
        .zip(d.bottom().branch_words())
        .all(|(u, v)| weight_w3alt(u) == weight_w3alt(&v) && u.len() % 2 == v.len() % 2))
}
