//! Exact-rational polynomials in `q` and PORC pairs of them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Rat = Ratio<i128>;

/// Polynomial in `q` with coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Poly(pub Vec<Rat>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        Poly(vec![c]).trimmed()
    }

    pub fn int(n: i128) -> Self {
        Poly::constant(Rat::from_integer(n))
    }

    pub fn frac(n: i128, d: i128) -> Self {
        Poly::constant(Rat::new(n, d))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Poly(vec![Rat::zero(), Rat::one()])
    }

    /// `q − c`.
    pub fn q_minus(c: i128) -> Self {
        Poly(vec![Rat::from_integer(-c), Rat::one()])
    }

    /// `v = q − 1`.
    pub fn v() -> Self {
        Poly::q_minus(1)
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Poly::int(1);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn eval(&self, q: i128) -> Rat {
        let x = Rat::from_integer(q);
        self.0.iter().rev().fold(Rat::zero(), |acc, &c| acc * x + c)
    }

    /// Value at an integer point, which must be an integer.
    pub fn eval_int(&self, q: i128) -> Option<i128> {
        let v = self.eval(q);
        v.is_integer().then(|| v.to_integer())
    }

    /// Builds `Σ c_k v^k` from coefficients in `v = q − 1`.
    pub fn from_v(coeffs: &[Rat]) -> Self {
        let v = Poly::v();
        let mut acc = Poly::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            acc = acc + &v.pow(k as u32) * &Poly::constant(c);
        }
        acc
    }

    /// Coefficients in `v = q − 1`.
    pub fn to_v(&self) -> Vec<Rat> {
        // Substitute q = v + 1.
        let vp1 = Poly(vec![Rat::one(), Rat::one()]);
        let mut acc = Poly::zero();
        for (k, &c) in self.0.iter().enumerate() {
            acc = acc + &vp1.pow(k as u32) * &Poly::constant(c);
        }
        acc.0
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); k];
        c.extend_from_slice(&self.0);
        Poly(c)
    }

    /// Display in the variable `var` (`"q"` or `"v"`), highest degree first.
    pub fn render(&self, var: &str) -> String {
        let coeffs = if var == "v" { self.to_v() } else { self.0.clone() };
        render_coeffs(&coeffs, var)
    }
}

fn render_coeffs(coeffs: &[Rat], var: &str) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = *c < Rat::zero();
        let a = c.abs();
        let (n, d) = (*a.numer(), *a.denom());
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let mut s = if k == 0 {
            n.to_string()
        } else if n == 1 {
            mono
        } else {
            format!("{n}{mono}")
        };
        if d != 1 {
            s = format!("{s}/{d}");
        }
        parts.push((neg, s));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, s)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&s);
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("v"))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let c = (0..n)
            .map(|i| self.0.get(i).copied().unwrap_or_default() + o.0.get(i).copied().unwrap_or_default())
            .collect();
        Poly(c).trimmed()
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self + &(-o)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly(c).trimmed()
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

/// Parity class of `f` for `q = 2^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_q(q: u32) -> Self {
        if q.trailing_zeros() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A polynomial on the two residue classes of `f` modulo 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PorcPolynomial {
    pub even: Poly,
    pub odd: Poly,
}

impl PorcPolynomial {
    pub fn uniform(p: Poly) -> Self {
        PorcPolynomial { even: p.clone(), odd: p }
    }

    pub fn only(parity: Parity, p: Poly) -> Self {
        match parity {
            Parity::Even => PorcPolynomial { even: p, odd: Poly::zero() },
            Parity::Odd => PorcPolynomial { even: Poly::zero(), odd: p },
        }
    }

    pub fn part(&self, parity: Parity) -> &Poly {
        match parity {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_uniform(&self) -> bool {
        self.even == self.odd
    }

    /// Value at `q = 2^f`.
    pub fn eval(&self, q: u32) -> Rat {
        self.part(Parity::of_q(q)).eval(q as i128)
    }

    pub fn scale(&self, p: &Poly) -> Self {
        PorcPolynomial {
            even: &self.even * p,
            odd: &self.odd * p,
        }
    }

    pub fn add_assign(&mut self, o: &PorcPolynomial) {
        self.even = &self.even + &o.even;
        self.odd = &self.odd + &o.odd;
    }
}

impl fmt::Display for PorcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_uniform() {
            write!(f, "{}", self.even)
        } else {
            write!(f, "f even: {}; f odd: {}", self.even, self.odd)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_round_trip() {
        let p = Poly::from_v(&[Rat::from_integer(1), Rat::from_integer(4), Rat::new(8, 3)]);
        assert_eq!(p.to_v(), vec![Rat::from_integer(1), Rat::from_integer(4), Rat::new(8, 3)]);
        assert_eq!(p.eval(2), Rat::new(23, 3));
        assert_eq!(p.render("v"), "8v^2/3 + 4v + 1");
    }

    #[test]
    fn arithmetic() {
        let a = Poly::q_minus(1);
        let b = Poly::q_minus(2);
        assert_eq!((&a * &b).0, vec![Rat::from_integer(2), Rat::from_integer(-3), Rat::from_integer(1)]);
        assert!((a.clone() - a).is_zero());
        assert_eq!(Poly::q().pow(3).shift(1).degree(), Some(4));
    }
}
