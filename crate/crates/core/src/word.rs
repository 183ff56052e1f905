//! Words in the generators x_i (F), y_i (F₃, F₄) and w_i (the generators of
//! the 3-colorable subgroup of F), normal forms and the abelianization.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::morphisms;
use crate::tree::{Arity, Tree, TreeDiagram};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X,
    Y,
    W,
}

impl Symbol {
    fn letter(self) -> char {
        match self {
            Symbol::X => 'x',
            Symbol::Y => 'y',
            Symbol::W => 'w',
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub symbol: Symbol,
    pub index: u32,
    pub exp: i64,
}

impl Letter {
    pub fn new(symbol: Symbol, index: u32, exp: i64) -> Letter {
        Letter { symbol, index, exp }
    }
}

/// A product of generator powers, read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    letters: Vec<Letter>,
}

impl GeneratorWord {
    pub fn identity() -> GeneratorWord {
        GeneratorWord::default()
    }

    /// Builds a word, merging equal neighbours and dropping zero exponents.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> GeneratorWord {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last_mut() {
                Some(last) if last.symbol == l.symbol && last.index == l.index => {
                    last.exp += l.exp;
                    if last.exp == 0 {
                        out.pop();
                    }
                }
                _ if l.exp != 0 => out.push(l),
                _ => {}
            }
        }
        GeneratorWord { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord {
            letters: self.letters.iter().rev().map(|l| Letter { exp: -l.exp, ..*l }).collect(),
        }
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        GeneratorWord::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    /// The arity the word's generators live in, if it is determined.
    pub fn natural_arity(&self) -> Option<Arity> {
        self.letters.iter().find_map(|l| match l.symbol {
            Symbol::X | Symbol::W => Some(Arity::BINARY),
            Symbol::Y => None,
        })
    }
}

/// Parses whitespace-separated tokens `x3`, `y0^-2`, `w1^3`. The token `1`
/// and the empty string denote the identity.
impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeneratorWord> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let bad = || Error::WordSyntax(tok.to_string());
            let symbol = match tok.as_bytes()[0] {
                b'x' => Symbol::X,
                b'y' => Symbol::Y,
                b'w' => Symbol::W,
                _ => return Err(bad()),
            };
            let (idx, exp) = match tok[1..].split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
                None => (&tok[1..], 1),
            };
            if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let index = idx.parse::<u32>().map_err(|_| bad())?;
            letters.push(Letter::new(symbol, index, exp));
        }
        Ok(GeneratorWord::from_letters(letters))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", l.symbol.letter(), l.index)?;
            if l.exp != 1 {
                write!(f, "^{}", l.exp)?;
            }
        }
        Ok(())
    }
}

/// The reduced diagram of the i-th standard generator of F_k.
///
/// For `i ≤ k-2` the top tree has a caret below root child `i` and the bottom
/// tree a caret below the last root child; larger indices are right shifts.
pub fn generator_diagram(arity: Arity, i: usize) -> TreeDiagram {
    let k = arity.get();
    if i >= k - 1 {
        return generator_diagram(arity, i - (k - 1)).shift_right();
    }
    let with_caret_at = |pos: usize| {
        let mut c = vec![Tree::Leaf; k];
        c[pos] = Tree::caret(arity);
        Tree::Node(c)
    };
    TreeDiagram::new(with_caret_at(i), with_caret_at(k - 1), arity).expect("generator shape")
}

fn letter_diagram(l: &Letter, arity: Arity) -> Result<TreeDiagram> {
    let base = match (l.symbol, arity.get()) {
        (Symbol::X, 2) | (Symbol::Y, 3) | (Symbol::Y, 4) => generator_diagram(arity, l.index as usize),
        (Symbol::W, 2) => morphisms::phi(&generator_diagram(Arity::QUATERNARY, l.index as usize))?,
        (s, k) => return Err(Error::WrongFamily { family: s.letter(), arity: k }),
    };
    Ok(base.pow(l.exp))
}

/// Reduced diagram of the product of the word's letters.
pub fn word_to_diagram(w: &GeneratorWord, arity: Arity) -> Result<TreeDiagram> {
    let mut acc = TreeDiagram::identity(arity);
    for l in &w.letters {
        acc = acc.multiply(&letter_diagram(l, arity)?)?;
    }
    Ok(acc)
}

/// `x0^a0 … xn^an xn^-bn … x0^-b0`. Trailing zeros are trimmed from both parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.b.is_empty()
    }

    pub fn to_word(&self) -> GeneratorWord {
        let pos = self.a.iter().enumerate().map(|(i, &e)| Letter::new(Symbol::X, i as u32, e as i64));
        let neg = self.b.iter().enumerate().rev().map(|(i, &e)| Letter::new(Symbol::X, i as u32, -(e as i64)));
        GeneratorWord::from_letters(pos.chain(neg))
    }

    /// Checks the uniqueness conditions: the last exponents are not both
    /// zero, and whenever `a_i` and `b_i` are both non-zero so is one of
    /// `a_{i+1}`, `b_{i+1}`.
    pub fn is_valid(&self) -> bool {
        let n = self.a.len().max(self.b.len());
        let at = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
        if n == 0 {
            return true;
        }
        if at(&self.a, n - 1) == 0 && at(&self.b, n - 1) == 0 {
            return false;
        }
        (0..n).all(|i| {
            at(&self.a, i) == 0 || at(&self.b, i) == 0 || at(&self.a, i + 1) != 0 || at(&self.b, i + 1) != 0
        })
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_word().fmt(f)
    }
}

/// Exponent attached to each leaf: the number of consecutive left edges
/// climbing from the leaf that do not end on the right spine.
fn leaf_exponents(t: &Tree) -> Vec<u32> {
    fn walk(t: &Tree, on_spine: bool, chain: u32, out: &mut Vec<u32>) {
        match t {
            Tree::Leaf => out.push(chain),
            Tree::Node(c) => {
                let last = c.len() - 1;
                for (i, child) in c.iter().enumerate() {
                    let up = if i == 0 && !on_spine { chain + 1 } else { 0 };
                    walk(child, on_spine && i == last, up, out);
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(t, true, 0, &mut out);
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Normal form of an element of F.
pub fn normal_form(d: &TreeDiagram) -> Result<NormalForm> {
    require_binary(d)?;
    let d = d.reduce();
    Ok(NormalForm { a: leaf_exponents(d.top()), b: leaf_exponents(d.bottom()) })
}

/// Whether the element lies in the positive monoid, i.e. its reduced bottom
/// tree is the right vine.
pub fn is_positive(d: &TreeDiagram) -> bool {
    d.reduce().bottom().is_right_vine()
}

/// `(log₂ f'(0), log₂ f'(1))`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianImage(pub i64, pub i64);

impl std::ops::Add for AbelianImage {
    type Output = AbelianImage;
    fn add(self, o: AbelianImage) -> AbelianImage {
        AbelianImage(self.0 + o.0, self.1 + o.1)
    }
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

pub fn abelianization(d: &TreeDiagram) -> Result<AbelianImage> {
    require_binary(d)?;
    let depth = |t: &Tree, left: bool| {
        (if left { t.leftmost_depth() } else { t.rightmost_depth() }) as i64
    };
    Ok(AbelianImage(
        depth(d.top(), true) - depth(d.bottom(), true),
        depth(d.top(), false) - depth(d.bottom(), false),
    ))
}

/// Membership in the rectangular subgroup K(a,b): `a | log₂ f'(0)` and
/// `b | log₂ f'(1)`.
pub fn in_rectangular(d: &TreeDiagram, a: u32, b: u32) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(Error::WordSyntax(format!("rect:{a}:{b}")));
    }
    let p = abelianization(d)?;
    Ok(p.0.rem_euclid(a as i64) == 0 && p.1.rem_euclid(b as i64) == 0)
}

pub(crate) fn require_binary(d: &TreeDiagram) -> Result<()> {
    if d.arity() != Arity::BINARY {
        return Err(Error::WrongArity { expected: 2, found: d.arity().get() });
    }
    Ok(())
}
