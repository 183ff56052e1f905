//! Component count, writhe, Kauffman bracket and Jones polynomial.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::link::LinkDiagram;
use crate::poly::LaurentPoly;

/// Largest diagram the state sum accepts.
pub const STATE_BUDGET: usize = 24;

pub fn components(l: &LinkDiagram) -> usize {
    l.components()
}

pub fn writhe(l: &LinkDiagram) -> Result<i64> {
    Ok(l.crossing_signs()?.iter().map(|&s| s as i64).sum())
}

fn find(parent: &mut [u16], mut x: u16) -> u16 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

/// Counts loops of every smoothing state and tallies them by
/// (number of A-smoothings, loops).
fn state_table(l: &LinkDiagram) -> Vec<Vec<u64>> {
    let n = l.crossing_count();
    let darts = 4 * n;
    let arcs: Vec<(u16, u16)> = l.edges().map(|d| (d as u16, l.twin(d) as u16)).collect();
    let blank = || vec![vec![0u64; 2 * n + 2]; n + 1];
    let chunk_bits = n.min(10);
    let chunks = 1u64 << (n - chunk_bits);
    (0..chunks)
        .into_par_iter()
        .fold(blank, |mut table, hi| {
            let mut parent = vec![0u16; darts];
            for lo in 0..1u64 << chunk_bits {
                let state = (hi << chunk_bits) | lo;
                for (i, p) in parent.iter_mut().enumerate() {
                    *p = i as u16;
                }
                let mut merges = 0;
                let mut join = |parent: &mut [u16], a: u16, b: u16| {
                    let (ra, rb) = (find(parent, a), find(parent, b));
                    if ra != rb {
                        parent[ra as usize] = rb;
                        merges += 1;
                    }
                };
                for &(a, b) in &arcs {
                    join(&mut parent, a, b);
                }
                for c in 0..n {
                    let b = 4 * c as u16;
                    if state >> c & 1 == 1 {
                        join(&mut parent, b, b + 1);
                        join(&mut parent, b + 2, b + 3);
                    } else {
                        join(&mut parent, b, b + 3);
                        join(&mut parent, b + 1, b + 2);
                    }
                }
                let loops = darts - merges;
                table[state.count_ones() as usize][loops] += 1;
            }
            table
        })
        .reduce(blank, |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        })
}

/// ⟨D⟩ by summing over all 2ⁿ smoothing states.
pub fn bracket_states(l: &LinkDiagram) -> Result<LaurentPoly> {
    let n = l.crossing_count();
    if n > STATE_BUDGET {
        return Err(Error::CrossingBudget { crossings: n, budget: STATE_BUDGET });
    }
    if n == 0 {
        return Ok(unlink_bracket(l.free_loops()));
    }
    let table = state_table(l);
    let delta = LaurentPoly::delta();
    let max_loops = 2 * n + 1 + l.free_loops();
    let powers: Vec<LaurentPoly> = (0..max_loops as u32).map(|k| delta.pow(k)).collect();
    let mut sum = LaurentPoly::zero();
    for (a, row) in table.iter().enumerate() {
        let e = 2 * a as i32 - n as i32;
        for (loops, &count) in row.iter().enumerate() {
            if count > 0 {
                let term = &powers[loops + l.free_loops() - 1] * &LaurentPoly::monomial(count as i64, e);
                sum += &term;
            }
        }
    }
    Ok(sum)
}

fn unlink_bracket(k: usize) -> LaurentPoly {
    if k == 0 {
        LaurentPoly::one()
    } else {
        LaurentPoly::delta().pow(k as u32 - 1)
    }
}

/// ⟨D⟩ by smoothing crossings one at a time. The state after smoothing the
/// first k crossings is the pairing of the remaining dart ends plus whether
/// a loop has closed yet; equal states are evaluated once.
pub fn bracket_skein(l: &LinkDiagram) -> LaurentPoly {
    let n = l.crossing_count();
    if n == 0 {
        return unlink_bracket(l.free_loops());
    }
    struct Ctx {
        n: usize,
        delta: LaurentPoly,
        memo: HashMap<(usize, Vec<u16>, bool), LaurentPoly>,
    }
    fn rec(ctx: &mut Ctx, k: usize, partner: &[u16], closed_any: bool) -> LaurentPoly {
        if k == ctx.n {
            return LaurentPoly::one();
        }
        let key = (k, partner[4 * k..].to_vec(), closed_any);
        if let Some(v) = ctx.memo.get(&key) {
            return v.clone();
        }
        let base = 4 * k as u16;
        let mut total = LaurentPoly::zero();
        for (exp, pairs) in [(1, [(0, 1), (2, 3)]), (-1, [(0, 3), (1, 2)])] {
            let mut p = partner.to_vec();
            let mut closed = 0;
            for (x, y) in pairs {
                let (x, y) = (base + x, base + y);
                let px = p[x as usize];
                if px == y {
                    closed += 1;
                } else {
                    let py = p[y as usize];
                    p[px as usize] = py;
                    p[py as usize] = px;
                }
            }
            let mut factor = LaurentPoly::a(exp);
            let mut any = closed_any;
            for _ in 0..closed {
                if any {
                    factor = &factor * &ctx.delta;
                }
                any = true;
            }
            let rest = rec(ctx, k + 1, &p, any);
            total += &(&factor * &rest);
        }
        ctx.memo.insert(key, total.clone());
        total
    }
    let partner: Vec<u16> = (0..4 * n).map(|d| l.twin(d) as u16).collect();
    let free = l.free_loops();
    let mut ctx = Ctx { n, delta: LaurentPoly::delta(), memo: HashMap::new() };
    let inner = rec(&mut ctx, 0, &partner, free > 0);
    if free > 1 {
        &LaurentPoly::delta().pow(free as u32 - 1) * &inner
    } else {
        inner
    }
}

/// The Kauffman bracket, normalized so the crossingless unknot is 1.
pub fn kauffman_bracket(l: &LinkDiagram) -> Result<LaurentPoly> {
    bracket_states(l)
}

/// V(D) = (−A³)^(−w) ⟨D⟩, in the variable A with t = A⁻⁴.
pub fn jones_polynomial(l: &LinkDiagram) -> Result<LaurentPoly> {
    let w = writhe(l)?;
    let bracket = kauffman_bracket(l)?;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(&LaurentPoly::monomial(sign, -3 * w as i32) * &bracket)
}
