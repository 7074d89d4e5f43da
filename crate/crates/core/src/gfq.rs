//! Arithmetic in GF(2^f), the trace character, and small polynomial root counts.
//!
//! Elements are `f`-bit patterns stored in a `u32`; bit `k` is the coefficient
//! of `x^k` in the polynomial basis defined by the modulus.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type Elem = u32;

const MODULI_TEXT: &str = include_str!("../data/moduli.txt");

/// Largest exponent accepted by [`FieldCtx`].
pub const MAX_F: u32 = 20;

/// Largest exponent for which log/antilog tables are built.
const TABLE_F: u32 = 16;

/// SHA-256 of the embedded modulus file.
pub fn moduli_checksum() -> String {
    hex::encode(Sha256::digest(MODULI_TEXT.as_bytes()))
}

/// The default modulus for `f`, read from the embedded data file.
pub fn default_modulus(f: u32) -> Result<u32> {
    for line in MODULI_TEXT.lines() {
        let Some((k, bits)) = line.split_once(':') else {
            continue;
        };
        let k: u32 = k
            .trim()
            .parse()
            .map_err(|e| Error::Data(format!("moduli file: {e}")))?;
        if k == f {
            return u32::from_str_radix(bits.trim(), 2)
                .map_err(|e| Error::Data(format!("moduli file, f={f}: {e}")));
        }
    }
    Err(Error::Field(format!("no modulus recorded for f={f}")))
}

/// Carry-less product of two polynomials over GF(2) (no reduction).
fn clmul(a: u64, b: u64) -> u64 {
    let mut r = 0;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        a <<= 1;
        b >>= 1;
    }
    r
}

fn poly_deg(a: u64) -> i32 {
    63 - a.leading_zeros() as i32
}

fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_deg(m);
    while a != 0 && poly_deg(a) >= dm {
        a ^= m << (poly_deg(a) - dm);
    }
    a
}

/// Brute-force irreducibility test for a polynomial over GF(2).
pub fn is_irreducible(m: u32) -> bool {
    let m = m as u64;
    let d = poly_deg(m);
    if d < 1 {
        return false;
    }
    // Trial division by every polynomial of degree 1..=d/2.
    for g in 2u64..(1u64 << (d / 2 + 1)) {
        if poly_deg(g) >= 1 && poly_deg(g) <= d / 2 && poly_rem(m, g) == 0 {
            return false;
        }
    }
    true
}

/// All irreducible polynomials of degree `f`, in increasing bit order.
pub fn irreducible_moduli(f: u32) -> Vec<u32> {
    ((1u32 << f)..(1u32 << (f + 1)))
        .filter(|&m| is_irreducible(m))
        .collect()
}

#[derive(Debug, Clone)]
pub struct FieldCtx {
    pub f: u32,
    pub modulus: u32,
    q: u32,
    log: Vec<u32>,
    exp: Vec<u32>,
}

impl FieldCtx {
    /// Field of order `2^f` with the recorded default modulus.
    pub fn new(f: u32) -> Result<Self> {
        FieldCtx::with_modulus(f, default_modulus(f)?)
    }

    /// Field of order `2^f` with an explicit modulus (bit `f` must be set).
    pub fn with_modulus(f: u32, modulus: u32) -> Result<Self> {
        if f == 0 || f > MAX_F {
            return Err(Error::Field(format!("f={f} outside 1..={MAX_F}")));
        }
        if poly_deg(modulus as u64) != f as i32 {
            return Err(Error::Field(format!(
                "modulus {modulus:b} does not have degree {f}"
            )));
        }
        if !is_irreducible(modulus) {
            return Err(Error::Field(format!("modulus {modulus:b} is reducible")));
        }
        let mut ctx = FieldCtx {
            f,
            modulus,
            q: 1 << f,
            log: Vec::new(),
            exp: Vec::new(),
        };
        if f <= TABLE_F {
            ctx.build_tables();
        }
        Ok(ctx)
    }

    /// Field of order `q`, which must be a power of two.
    pub fn for_q(q: u32) -> Result<Self> {
        if q < 2 || !q.is_power_of_two() {
            return Err(Error::Field(format!("q={q} is not a power of 2")));
        }
        FieldCtx::new(q.trailing_zeros())
    }

    fn build_tables(&mut self) {
        let n = self.q - 1;
        let g = (1..self.q)
            .find(|&g| self.order_slow(g) == n)
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1;
        for k in 0..n {
            exp[k as usize] = x;
            exp[(k + n) as usize] = x;
            log[x as usize] = k;
            x = self.mul_slow(x, g);
        }
        self.exp = exp;
        self.log = log;
    }

    fn order_slow(&self, g: Elem) -> u32 {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = self.mul_slow(x, g);
            k += 1;
            if k > self.q {
                return 0;
            }
        }
        k
    }

    fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        poly_rem(clmul(a as u64, b as u64), self.modulus as u64) as Elem
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// All field elements `0..q` in encoding order.
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }

    pub fn nonzero(&self) -> std::ops::Range<Elem> {
        1..self.q
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.mul_slow(a, b);
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    #[inline]
    pub fn sqr(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::Field("inverse of zero".into()));
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The unique square root (Frobenius is bijective).
    pub fn sqrt(&self, a: Elem) -> Elem {
        self.pow(a, self.q as u64 / 2)
    }

    /// Absolute trace `Σ_{k<f} x^{2^k}`, returned as 0 or 1.
    pub fn trace(&self, x: Elem) -> u32 {
        let mut t = 0;
        let mut y = x;
        for _ in 0..self.f {
            t ^= y;
            y = self.sqr(y);
        }
        debug_assert!(t <= 1);
        t
    }

    /// Whether `x = t² + t` for some `t`, i.e. `Tr(x) = 0`.
    pub fn in_ker_phi(&self, x: Elem) -> bool {
        self.trace(x) == 0
    }

    /// All `y` with `y³ = c`.
    pub fn cube_roots(&self, c: Elem) -> Vec<Elem> {
        if c == 0 {
            return vec![0];
        }
        if (self.q - 1) % 3 != 0 {
            // Cubing is a bijection; its inverse is y ↦ y^e with 3e ≡ 1 mod q−1.
            let n = (self.q - 1) as u64;
            let e = (1..n).find(|e| (3 * e) % n == 1).unwrap_or(1);
            return vec![self.pow(c, e)];
        }
        let mut out: Vec<Elem> = self.nonzero().filter(|&y| self.pow(y, 3) == c).collect();
        out.sort_unstable();
        out
    }

    /// Evaluate a polynomial given by low-to-high coefficients.
    pub fn eval(&self, coeffs: &[Elem], x: Elem) -> Elem {
        let mut acc = 0;
        for &c in coeffs.iter().rev() {
            acc = self.mul(acc, x) ^ c;
        }
        acc
    }

    /// Number of distinct roots in `F_q`, by exhaustive evaluation.
    pub fn count_roots(&self, coeffs: &[Elem]) -> Result<usize> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::Precondition("zero polynomial has every element as root".into()));
        }
        if coeffs.len() > 9 {
            return Err(Error::Precondition("degree above 8".into()));
        }
        Ok(self.elements().filter(|&x| self.eval(coeffs, x) == 0).count())
    }

    /// Number of distinct roots computed as `deg gcd(P, X^q − X)`.
    pub fn count_roots_gcd(&self, coeffs: &[Elem]) -> Result<usize> {
        let p = trim(coeffs.to_vec());
        if p.is_empty() {
            return Err(Error::Precondition("zero polynomial".into()));
        }
        if p.len() == 1 {
            return Ok(0);
        }
        // X^q mod P by repeated squaring of X.
        let mut xq = vec![0, 1];
        for _ in 0..self.f {
            let sq = self.poly_mul(&xq, &xq);
            xq = self.poly_rem(&sq, &p)?;
        }
        let mut h = xq;
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] ^= 1;
        let g = self.poly_gcd(trim(h), p)?;
        Ok(g.len() - 1)
    }

    fn poly_mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                r[i + j] ^= self.mul(x, y);
            }
        }
        trim(r)
    }

    fn poly_rem(&self, a: &[Elem], m: &[Elem]) -> Result<Vec<Elem>> {
        let mut r = trim(a.to_vec());
        let lead_inv = self.inv(*m.last().expect("nonzero modulus"))?;
        while r.len() >= m.len() {
            let c = self.mul(*r.last().unwrap(), lead_inv);
            let shift = r.len() - m.len();
            for (k, &mk) in m.iter().enumerate() {
                r[shift + k] ^= self.mul(c, mk);
            }
            r = trim(r);
        }
        Ok(r)
    }

    fn poly_gcd(&self, mut a: Vec<Elem>, mut b: Vec<Elem>) -> Result<Vec<Elem>> {
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }
}

fn trim(mut v: Vec<Elem>) -> Vec<Elem> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Counts of cubic polynomials by number of roots in `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicCensus {
    pub counts: BTreeMap<u8, u64>,
}

impl CubicCensus {
    pub fn get(&self, i: u8) -> u64 {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// `roots[a][b]` = number of roots of `X³ + aX + b`, for all `a, b`.
fn depressed_cubic_table(ctx: &FieldCtx) -> Vec<u8> {
    let q = ctx.q() as usize;
    let mut t = vec![0u8; q * q];
    for x in ctx.elements() {
        let x3 = ctx.pow(x, 3);
        for a in ctx.elements() {
            let b = x3 ^ ctx.mul(a, x);
            t[a as usize * q + b as usize] += 1;
        }
    }
    t
}

fn census_from(counts: impl IntoIterator<Item = (u8, u64)>) -> CubicCensus {
    let mut m = BTreeMap::from([(0u8, 0u64), (1, 0), (3, 0)]);
    for (i, n) in counts {
        // With a nonzero constant term a double root forces b = 0, so no
        // cubic here has exactly two roots.
        if i == 2 {
            debug_assert_eq!(n, 0);
            continue;
        }
        *m.entry(i).or_insert(0) += n;
    }
    CubicCensus { counts: m }
}

/// Which of the two cubic families a closed form describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubicFamily {
    A,
    B,
}

/// A closed form `(q − r)(q − s + (−1)^{f+e}) / d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicFormula {
    pub family: CubicFamily,
    pub roots: u8,
    pub r: i64,
    pub s: i64,
    /// Parity offset of the sign: `+1` is `(−1)^{f+1}`, `0` is `(−1)^f`.
    pub e: u32,
    pub d: i64,
}

impl CubicFormula {
    /// Value at `f`, when integral.
    pub fn eval(&self, f: u32) -> Option<i64> {
        let q = 1i64 << f;
        let sign = if (f + self.e) % 2 == 0 { 1 } else { -1 };
        let num = (q - self.r) * (q - self.s + sign);
        (num % self.d == 0).then(|| num / self.d)
    }

    pub fn flipped(self) -> Self {
        CubicFormula { e: 1 - self.e, ..self }
    }

    pub fn render(&self) -> String {
        let sign = if self.e == 1 { "(−1)^{f+1}" } else { "(−1)^f" };
        format!("(q−{})(q−{}+{sign})/{}", self.r, self.s, self.d)
    }
}

/// The closed forms for `|A_i|` and `|B_i|` as conventionally printed.
pub fn printed_cubic_formulas() -> Vec<CubicFormula> {
    use CubicFamily::{A, B};
    let c = |family, roots, r, s, e, d| CubicFormula { family, roots, r, s, e, d };
    vec![
        c(A, 3, 1, 3, 1, 6),
        c(A, 1, 1, 1, 1, 2),
        c(A, 0, 1, 0, 0, 3),
        c(B, 3, 5, 3, 1, 6),
        c(B, 1, 3, 1, 0, 2),
        c(B, 0, 2, 0, 1, 3),
    ]
}

/// One line of the printed-versus-brute-force comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicReconciliation {
    pub printed: CubicFormula,
    /// Brute-force counts by `f`.
    pub brute: Vec<(u32, u64)>,
    /// Whether the printed form matches at every `f`.
    pub printed_matches: bool,
    /// The sign convention that matches, if either does.
    pub fitted: Option<CubicFormula>,
    /// `B`-family counts are compared per value of `b`, i.e. divided by `q − 1`.
    pub per_b: bool,
}

/// Compares the printed closed forms against brute force for `f = 1..=max_f`,
/// trying both parity conventions for the sign.
pub fn cubic_reconciliation(max_f: u32) -> Result<Vec<CubicReconciliation>> {
    let mut census = Vec::new();
    for f in 1..=max_f {
        let ctx = FieldCtx::new(f)?;
        census.push((f, cubic_census_a(&ctx), cubic_census_b(&ctx)));
    }
    let mut out = Vec::new();
    for printed in printed_cubic_formulas() {
        let per_b = printed.family == CubicFamily::B;
        let brute: Vec<(u32, u64)> = census
            .iter()
            .map(|(f, a, b)| {
                let n = match printed.family {
                    CubicFamily::A => a.get(printed.roots),
                    CubicFamily::B => b.get(printed.roots) / ((1u64 << f) - 1),
                };
                (*f, n)
            })
            .collect();
        let fits = |form: &CubicFormula| brute.iter().all(|&(f, n)| form.eval(f) == Some(n as i64));
        let printed_matches = fits(&printed);
        let fitted = [printed, printed.flipped()].into_iter().find(|c| fits(c));
        out.push(CubicReconciliation {
            printed,
            brute,
            printed_matches,
            fitted,
            per_b,
        });
    }
    Ok(out)
}

/// Root-count census of `p_{a,b}(X) = X³ + aX + b` over `a, b ∈ F_q^×`.
pub fn cubic_census_a(ctx: &FieldCtx) -> CubicCensus {
    let q = ctx.q() as usize;
    let t = depressed_cubic_table(ctx);
    let mut c = [0u64; 4];
    for a in 1..q {
        for b in 1..q {
            c[t[a * q + b] as usize] += 1;
        }
    }
    census_from((0..4).map(|i| (i as u8, c[i])))
}

/// Root-count census of `p_{b,c,t}(X) = X³ + (t/b + b²)X + (t + c)` over
/// `b ∈ F_q^×`, `t ∈ F_q^× ∖ {b³}`, `c ∈ F_q^× ∖ {t}`.
pub fn cubic_census_b(ctx: &FieldCtx) -> CubicCensus {
    let q = ctx.q() as usize;
    let t = depressed_cubic_table(ctx);
    let mut c = [0u64; 4];
    for b in ctx.nonzero() {
        let b3 = ctx.pow(b, 3);
        let binv = ctx.inv(b).expect("b nonzero");
        for tt in ctx.nonzero() {
            if tt == b3 {
                continue;
            }
            let a = ctx.mul(tt, binv) ^ ctx.sqr(b);
            // The constant term t + c ranges over F_q ∖ {0, t} as c ranges over F_q^× ∖ {t}.
            for beta in ctx.elements() {
                if beta == 0 || beta == tt {
                    continue;
                }
                c[t[a as usize * q + beta as usize] as usize] += 1;
            }
        }
    }
    census_from((0..4).map(|i| (i as u8, c[i])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn recorded_moduli_are_irreducible() {
        for f in 1..=16 {
            let ctx = FieldCtx::new(f).unwrap();
            assert_eq!(ctx.q(), 1 << f);
        }
    }

    #[test]
    fn trace_examples() {
        assert_eq!(FieldCtx::new(1).unwrap().trace(1), 1);
        assert_eq!(FieldCtx::new(2).unwrap().trace(1), 0);
        assert_eq!(FieldCtx::new(3).unwrap().trace(1), 1);
        let g4 = FieldCtx::new(2).unwrap();
        assert!(g4.in_ker_phi(1));
        assert!(g4.elements().any(|t| g4.sqr(t) ^ t == 1));
        assert!(!FieldCtx::new(1).unwrap().in_ker_phi(1));
    }

    #[test]
    fn trace_is_additive_and_frobenius_invariant() {
        for f in 1..=6 {
            let ctx = FieldCtx::new(f).unwrap();
            for x in ctx.elements() {
                assert_eq!(ctx.trace(ctx.sqr(x)), ctx.trace(x));
                let is_image = ctx.elements().any(|t| ctx.sqr(t) ^ t == x);
                assert_eq!(is_image, ctx.in_ker_phi(x));
                for y in ctx.elements() {
                    assert_eq!(ctx.trace(x ^ y), ctx.trace(x) ^ ctx.trace(y));
                }
            }
        }
    }

    #[test]
    fn field_axioms_small() {
        for f in 1..=5 {
            let ctx = FieldCtx::new(f).unwrap();
            for a in ctx.elements() {
                assert_eq!(ctx.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), 1);
                }
                assert_eq!(ctx.sqr(ctx.sqrt(a)), a);
                for b in ctx.elements() {
                    assert_eq!(ctx.mul(a, b), ctx.mul_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn cube_root_counts() {
        for f in 1..=8 {
            let ctx = FieldCtx::new(f).unwrap();
            assert_eq!(ctx.cube_roots(0), vec![0]);
            for c in ctx.nonzero() {
                let r = ctx.cube_roots(c);
                for &y in &r {
                    assert_eq!(ctx.pow(y, 3), c);
                }
                if f % 2 == 1 {
                    assert_eq!(r.len(), 1);
                } else {
                    assert!(r.len() == 0 || r.len() == 3);
                }
            }
        }
    }

    #[test]
    fn root_count_examples() {
        // X³+X+1 is irreducible over GF(2) and splits completely over GF(8).
        let g8 = FieldCtx::new(3).unwrap();
        assert_eq!(g8.count_roots(&[1, 1, 0, 1]).unwrap(), 3);
        assert_eq!(FieldCtx::new(1).unwrap().count_roots(&[1, 1, 0, 1]).unwrap(), 0);
        assert_eq!(FieldCtx::new(2).unwrap().count_roots(&[1, 1, 0, 1]).unwrap(), 0);
        let g4 = FieldCtx::new(2).unwrap();
        assert_eq!(g4.count_roots(&[1, 0, 0, 1]).unwrap(), 3);
        for f in 1..=5 {
            let ctx = FieldCtx::new(f).unwrap();
            for c in ctx.nonzero() {
                assert_eq!(ctx.count_roots(&[c, 0, 1]).unwrap(), 1);
            }
        }
        assert!(g4.count_roots(&[0, 0]).is_err());
    }

    #[test]
    fn root_count_matches_gcd() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for f in 1..=6 {
            let ctx = FieldCtx::new(f).unwrap();
            for _ in 0..1000 {
                let deg = rng.gen_range(1..=8);
                let mut p: Vec<Elem> = (0..deg).map(|_| rng.gen_range(0..ctx.q())).collect();
                p.push(rng.gen_range(1..ctx.q()));
                assert_eq!(ctx.count_roots(&p).unwrap(), ctx.count_roots_gcd(&p).unwrap());
            }
        }
    }

    #[test]
    fn frobenius_linearization() {
        for f in 1..=4 {
            let ctx = FieldCtx::new(f).unwrap();
            for c1 in ctx.elements() {
                for c2 in ctx.elements() {
                    let all = ctx
                        .elements()
                        .all(|s| ctx.trace(ctx.mul(c1, s) ^ ctx.mul(c2, ctx.sqr(s))) == 0);
                    assert_eq!(all, ctx.sqr(c1) == c2);
                }
            }
        }
    }

    #[test]
    fn cubic_census_examples() {
        let g2 = FieldCtx::new(1).unwrap();
        let a = cubic_census_a(&g2);
        assert_eq!((a.get(0), a.get(1), a.get(3)), (1, 0, 0));
        let g8 = FieldCtx::new(3).unwrap();
        assert_eq!(cubic_census_a(&g8).get(3), 7);
        for f in 1..=6 {
            let ctx = FieldCtx::new(f).unwrap();
            let q = ctx.q() as u64;
            let a = cubic_census_a(&ctx);
            assert_eq!(a.total(), (q - 1) * (q - 1));
            assert_eq!(a.get(2), 0);
            let b = cubic_census_b(&ctx);
            assert_eq!(b.total(), (q - 1) * (q - 2) * (q - 2));
        }
    }

    #[test]
    fn census_independent_of_modulus() {
        for f in 3..=5 {
            let mods = irreducible_moduli(f);
            assert!(mods.len() >= 2);
            let x = FieldCtx::with_modulus(f, mods[0]).unwrap();
            let y = FieldCtx::with_modulus(f, mods[mods.len() - 1]).unwrap();
            assert_eq!(cubic_census_a(&x), cubic_census_a(&y));
            assert_eq!(cubic_census_b(&x), cubic_census_b(&y));
        }
    }
}
