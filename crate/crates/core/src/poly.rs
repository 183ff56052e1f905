//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Σ c_e·A^e with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly(BTreeMap<i32, i64>);

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> LaurentPoly {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        LaurentPoly(m)
    }

    /// A^e.
    pub fn a(exp: i32) -> LaurentPoly {
        LaurentPoly::monomial(1, exp)
    }

    /// The loop value −A² − A⁻².
    pub fn delta() -> LaurentPoly {
        LaurentPoly::from_terms([(-1, 2), (-1, -2)])
    }

    /// Builds from `(coefficient, exponent)` pairs; repeated exponents add.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i32)>) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (c, e) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let slot = self.0.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies every exponent by `k`, e.g. `k = -1` for A ↦ A⁻¹.
    pub fn scale_exponents(&self, k: i32) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e * k, c)).collect())
    }

    pub fn shift(&self, by: i32) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e + by, c)).collect())
    }

    /// Rewrites in t = A⁻⁴ when every exponent is a multiple of 4.
    pub fn to_t_string(&self) -> Option<String> {
        if self.0.keys().any(|e| e % 4 != 0) {
            return None;
        }
        let t = self.scale_exponents(-1);
        Some(format_terms(&LaurentPoly(t.0.iter().map(|(&e, &c)| (e / 4, c)).collect()), "t"))
    }
}

fn format_terms(p: &LaurentPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (e, c)) in p.terms().rev().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if i == 0 {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push(' ');
            s.push_str(sign);
            s.push(' ');
        }
        let m = c.unsigned_abs();
        match (m, e) {
            (_, 0) => s.push_str(&m.to_string()),
            (1, 1) => s.push_str(var),
            (_, 1) => s.push_str(&format!("{m}*{var}")),
            (1, _) => s.push_str(&format!("{var}^{e}")),
            _ => s.push_str(&format!("{m}*{var}^{e}")),
        }
    }
    s
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self, "A"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        for (e, c) in o.terms() {
            self.add_term(c, e);
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, o: LaurentPoly) -> LaurentPoly {
        self += &o;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        &self - &o
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                r.add_term(c1 * c2, e1 + e2);
            }
        }
        r
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        &self * &o
    }
}
