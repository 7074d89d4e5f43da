//! Chevalley commutator relations and normal-form collection.
//!
//! For positive roots `α, β` with `α ≠ β`,
//! `[x_α(t), x_β(s)] = ∏ x_{aα+bβ}(c·(−s)^b t^a)` over `a, b ≥ 1`, in order of
//! increasing `a + b`, with the commutator convention `[x, y] = x⁻¹y⁻¹xy`.
//! The constants `c` are derived from one structure-constant sign per positive
//! root (extraspecial pairs) in the usual way.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfq::{Elem, FieldCtx};
use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

/// One factor `x_root(coeff · (−s)^b · t^a)` of a commutator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub root: usize,
    pub coeff: i64,
    pub a: u32,
    pub b: u32,
}

/// Signed root used while deriving structure constants.
type SRoot = Vec<i32>;

struct Constants<'a> {
    rs: &'a RootSystem,
    /// `N_{α_i, α_j}` for positive pairs whose sum is a root, else 0.
    npos: Vec<i64>,
}

impl<'a> Constants<'a> {
    fn n(&self) -> usize {
        self.rs.len()
    }

    fn idx(&self, v: &[i32]) -> Option<usize> {
        self.rs.find(v)
    }

    fn len2(&self, v: &[i32]) -> i64 {
        self.rs.inner(v, v) as i64
    }

    /// `N_{x,y}` for arbitrary (signed) roots; zero when `x + y` is not a root.
    fn general(&self, x: &[i32], y: &[i32]) -> i64 {
        let s: SRoot = add(x, y);
        if s.iter().all(|&c| c == 0) || !self.rs.is_root_or_negative(&s) {
            return 0;
        }
        let xp = is_pos(x);
        let yp = is_pos(y);
        match (xp, yp) {
            (true, true) => {
                let (i, j) = (self.idx(x).unwrap(), self.idx(y).unwrap());
                self.npos[i * self.n() + j]
            }
            (false, false) => -self.general(&neg(x), &neg(y)),
            (false, true) => -self.general(y, x),
            (true, false) => {
                // x + y + z = 0 with z = −(x + y); use the triangle identity
                // N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y).
                let z = neg(&s);
                let (num, den) = if is_pos(&z) {
                    (self.len2(&z) * self.general(&z, x), self.len2(y))
                } else {
                    (self.len2(&z) * self.general(y, &z), self.len2(x))
                };
                debug_assert!(num % den == 0);
                num / den
            }
        }
    }

    fn string_below(&self, alpha: &[i32], beta: &[i32]) -> i64 {
        // Largest p with β − pα a root.
        let mut p = 0;
        let mut v = beta.to_vec();
        loop {
            v = sub(&v, alpha);
            if !self.rs.is_root_or_negative(&v) || v.iter().all(|&c| c == 0) {
                return p;
            }
            p += 1;
        }
    }

    fn compute(rs: &'a RootSystem) -> Self {
        let n = rs.len();
        let mut c = Constants {
            rs,
            npos: vec![0; n * n],
        };
        for xi in 0..n {
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for i in 0..xi {
                for j in (i + 1)..xi {
                    if rs.sum(i, j) == Some(xi) {
                        pairs.push((i, j));
                    }
                }
            }
            let Some(&(e1, e2)) = pairs.first() else {
                continue;
            };
            let (ra, rb) = (rs.roots[e1].coeffs.clone(), rs.roots[e2].coeffs.clone());
            let p = c.string_below(&ra, &rb);
            c.npos[e1 * n + e2] = p + 1;
            c.npos[e2 * n + e1] = -(p + 1);
            let gamma = neg(&ra);
            let delta = neg(&rb);
            let n_gd = -(p + 1);
            let xi_c = rs.roots[xi].coeffs.clone();
            for &(i, j) in &pairs[1..] {
                let alpha = rs.roots[i].coeffs.clone();
                let beta = rs.roots[j].coeffs.clone();
                let mut rest = Ratio::from_integer(0i64);
                let bg = add(&beta, &gamma);
                if c.rs.is_root_or_negative(&bg) {
                    rest += Ratio::new(
                        c.general(&beta, &gamma) * c.general(&alpha, &delta),
                        c.len2(&bg),
                    );
                }
                let ga = add(&gamma, &alpha);
                if c.rs.is_root_or_negative(&ga) {
                    rest += Ratio::new(
                        c.general(&gamma, &alpha) * c.general(&beta, &delta),
                        c.len2(&ga),
                    );
                }
                let val = -rest * Ratio::from_integer(c.len2(&xi_c)) / Ratio::from_integer(n_gd);
                assert!(val.is_integer(), "non-integral structure constant");
                let v = val.to_integer();
                c.npos[i * n + j] = v;
                c.npos[j * n + i] = -v;
            }
        }
        c
    }

    /// `M_{x,y,i} = (1/i!) ∏_{k<i} N_{x, kx+y}`.
    fn m(&self, x: &[i32], y: &[i32], i: u32) -> Ratio<i64> {
        let mut prod = Ratio::from_integer(1i64);
        let mut cur = y.to_vec();
        for k in 0..i {
            prod *= Ratio::from_integer(self.general(x, &cur));
            cur = add(&cur, x);
            prod /= Ratio::from_integer(k as i64 + 1);
        }
        prod
    }
}

fn add(a: &[i32], b: &[i32]) -> SRoot {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i32], b: &[i32]) -> SRoot {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[i32]) -> SRoot {
    a.iter().map(|x| -x).collect()
}

fn is_pos(a: &[i32]) -> bool {
    a.iter().all(|&c| c >= 0)
}

fn scale_add(a: &[i32], i: i32, b: &[i32], j: i32) -> SRoot {
    a.iter().zip(b).map(|(x, y)| i * x + j * y).collect()
}

#[derive(Debug, Clone)]
pub struct CommutatorTable {
    pub rs: RootSystem,
    pub p: u32,
    n: usize,
    npos: Vec<i64>,
    terms: Vec<Vec<Term>>,
    modp: Vec<Vec<Term>>,
    supp: Vec<RootSet>,
}

impl CommutatorTable {
    pub fn build(rs: &RootSystem, p: u32) -> Result<Self> {
        if p < 2 || (2..p).any(|d| d * d <= p && p % d == 0) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        let n = rs.len();
        let consts = Constants::compute(rs);
        let mut terms = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    terms[i * n + j] = pair_terms(&consts, i, j);
                }
            }
        }
        let modp: Vec<Vec<Term>> = terms
            .iter()
            .map(|ts| {
                ts.iter()
                    .filter_map(|t| {
                        let c = t.coeff.rem_euclid(p as i64);
                        (c != 0).then_some(Term { coeff: c, ..*t })
                    })
                    .collect()
            })
            .collect();
        let supp = modp
            .iter()
            .map(|ts| ts.iter().map(|t| t.root).collect())
            .collect();
        Ok(CommutatorTable {
            rs: rs.clone(),
            p,
            n,
            npos: consts.npos,
            terms,
            modp,
            supp,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Integer terms of `[x_i(t), x_j(s)]`.
    pub fn terms(&self, i: usize, j: usize) -> &[Term] {
        &self.terms[i * self.n + j]
    }

    /// Terms with coefficients reduced mod `p` (zero terms dropped).
    #[inline]
    pub fn terms_mod_p(&self, i: usize, j: usize) -> &[Term] {
        &self.modp[i * self.n + j]
    }

    /// Roots occurring in the char-`p` commutator of `(i, j)`.
    #[inline]
    pub fn support(&self, i: usize, j: usize) -> RootSet {
        self.supp[i * self.n + j]
    }

    /// Structure constant `N_{α_i, α_j}` (zero when the sum is not a root).
    pub fn structure_constant(&self, i: usize, j: usize) -> i64 {
        self.npos[i * self.n + j]
    }

    /// Text dump, one line per ordered pair `i < j` with nontrivial terms.
    pub fn dump(&self, reduced: bool) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let ts = if reduced {
                    self.terms_mod_p(i, j)
                } else {
                    self.terms(i, j)
                };
                if ts.is_empty() {
                    continue;
                }
                let _ = write!(out, "{} {} ->", i + 1, j + 1);
                for t in ts {
                    let _ = write!(out, " ({}, {}, {}, {})", t.root + 1, t.coeff, t.a, t.b);
                }
                out.push('\n');
            }
        }
        out
    }
}

fn pair_terms(c: &Constants<'_>, i: usize, j: usize) -> Vec<Term> {
    let rs = c.rs;
    let a_r = &rs.roots[i].coeffs;
    let b_r = &rs.roots[j].coeffs;
    let mut out: Vec<Term> = Vec::new();
    let mut push = |a: u32, b: u32, coeff: Ratio<i64>| {
        let target = scale_add(a_r, a as i32, b_r, b as i32);
        if let Some(k) = rs.find(&target) {
            assert!(coeff.is_integer(), "non-integral commutator coefficient");
            let coeff = coeff.to_integer();
            if coeff != 0 && !out.iter().any(|t| t.root == k) {
                out.push(Term { root: k, coeff, a, b });
            }
        }
    };
    for a in 1..=3u32 {
        let sign = if a % 2 == 0 { 1 } else { -1 };
        push(a, 1, Ratio::from_integer(sign) * c.m(a_r, b_r, a));
    }
    for b in 2..=3u32 {
        push(1, b, c.m(b_r, a_r, b));
    }
    let ab = add(a_r, b_r);
    if rs.find(&ab).is_some() {
        push(2, 3, c.m(&ab, b_r, 2) / Ratio::from_integer(3));
        push(3, 2, Ratio::new(-2, 3) * c.m(&ab, a_r, 2));
    }
    out.sort_by_key(|t| (t.a + t.b, t.root));
    out
}

/// Normal-form arithmetic in `U` over `GF(2^f)`, or in a quattern quotient by
/// dropping the coordinates of a normal pattern subgroup `kill`.
#[derive(Debug, Clone, Copy)]
pub struct Collector<'a> {
    pub tab: &'a CommutatorTable,
    pub ctx: &'a FieldCtx,
    pub kill: RootSet,
}

/// Element of `U` in normal form `x_1(t_1)⋯x_N(t_N)`.
pub type UElement = Vec<Elem>;

impl<'a> Collector<'a> {
    pub fn new(tab: &'a CommutatorTable, ctx: &'a FieldCtx) -> Result<Self> {
        Collector::quotient(tab, ctx, RootSet::EMPTY)
    }

    pub fn quotient(tab: &'a CommutatorTable, ctx: &'a FieldCtx, kill: RootSet) -> Result<Self> {
        if tab.p != 2 {
            return Err(Error::Unsupported(format!(
                "collection is implemented over GF(2^f); table has p={}",
                tab.p
            )));
        }
        Ok(Collector { tab, ctx, kill })
    }

    pub fn identity(&self) -> UElement {
        vec![0; self.tab.len()]
    }

    pub fn root_element(&self, k: usize, t: Elem) -> UElement {
        let mut v = self.identity();
        if !self.kill.contains(k) {
            v[k] = t;
        }
        v
    }

    /// Right-multiplies `w` in place by `x_j(b)`.
    pub fn push(&self, w: &mut [Elem], j: usize, b: Elem) {
        if b == 0 || self.kill.contains(j) {
            return;
        }
        let n = w.len();
        let mut tail: [(u8, Elem); 128] = [(0, 0); 128];
        let mut nt = 0;
        for k in (j + 1)..n {
            if w[k] != 0 {
                tail[nt] = (k as u8, w[k]);
                nt += 1;
                w[k] = 0;
            }
        }
        w[j] ^= b;
        // w·x_k(c)·x_j(b) = w·x_j(b)·x_k(c)·[x_k(c), x_j(b)]
        for &(k, c) in &tail[..nt] {
            let k = k as usize;
            self.push(w, k, c);
            for t in self.tab.terms_mod_p(k, j) {
                let v = self
                    .ctx
                    .mul(self.ctx.pow(c, t.a as u64), self.ctx.pow(b, t.b as u64));
                self.push(w, t.root, v);
            }
        }
    }

    pub fn mul(&self, u: &[Elem], v: &[Elem]) -> UElement {
        let mut w = u.to_vec();
        self.mul_into(&mut w, v);
        w
    }

    pub fn mul_into(&self, w: &mut [Elem], v: &[Elem]) {
        for (k, &c) in v.iter().enumerate() {
            self.push(w, k, c);
        }
    }

    pub fn inverse(&self, u: &[Elem]) -> UElement {
        // In characteristic 2, x_k(t)⁻¹ = x_k(t).
        let mut w = self.identity();
        for k in (0..u.len()).rev() {
            self.push(&mut w, k, u[k]);
        }
        w
    }

    /// Group commutator `u⁻¹v⁻¹uv`.
    pub fn group_commutator(&self, u: &[Elem], v: &[Elem]) -> UElement {
        let mut w = self.inverse(u);
        self.mul_into(&mut w, &self.inverse(v));
        self.mul_into(&mut w, u);
        self.mul_into(&mut w, v);
        w
    }

    /// `g⁻¹ u g`.
    pub fn conjugate(&self, u: &[Elem], g: &[Elem]) -> UElement {
        let mut w = self.inverse(g);
        self.mul_into(&mut w, u);
        self.mul_into(&mut w, g);
        w
    }

    /// `[x_i(t), x_j(s)]` assembled from the table factors.
    pub fn commutator(&self, i: usize, t: Elem, j: usize, s: Elem) -> UElement {
        let mut w = self.identity();
        if i == j || t == 0 || s == 0 {
            return w;
        }
        for term in self.tab.terms_mod_p(i, j) {
            let v = self
                .ctx
                .mul(self.ctx.pow(t, term.a as u64), self.ctx.pow(s, term.b as u64));
            self.push(&mut w, term.root, v);
        }
        w
    }
}

/// Multiset of `|N_{αβ}|` values, handy for summaries.
pub fn constant_histogram(tab: &CommutatorTable) -> HashMap<i64, usize> {
    let mut h = HashMap::new();
    for i in 0..tab.len() {
        for j in 0..tab.len() {
            let v = tab.structure_constant(i, j);
            if v != 0 {
                *h.entry(v.abs()).or_insert(0) += 1;
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootType;

    fn table(ty: RootType, r: usize, p: u32) -> CommutatorTable {
        CommutatorTable::build(&RootSystem::build(ty, r).unwrap(), p).unwrap()
    }

    fn all_types() -> Vec<(RootType, usize)> {
        use RootType::*;
        vec![
            (A, 2),
            (A, 4),
            (B, 2),
            (B, 3),
            (B, 4),
            (C, 3),
            (C, 4),
            (D, 4),
            (D, 5),
            (E, 6),
            (F, 4),
            (G, 2),
        ]
    }

    #[test]
    fn structure_constant_magnitudes() {
        for (ty, r) in all_types() {
            let rs = RootSystem::build(ty, r).unwrap();
            let c = Constants::compute(&rs);
            for i in 0..rs.len() {
                for j in 0..rs.len() {
                    let v = c.npos[i * rs.len() + j];
                    if rs.sum(i, j).is_some() {
                        let p = c.string_below(&rs.roots[i].coeffs, &rs.roots[j].coeffs);
                        assert_eq!(v.abs(), p + 1, "{ty}{r} ({i},{j})");
                    } else {
                        assert_eq!(v, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn structure_constant_identities() {
        // Triangle and four-term identities over all roots of small systems.
        for (ty, r) in [
            (RootType::B, 3),
            (RootType::C, 3),
            (RootType::G, 2),
            (RootType::F, 4),
            (RootType::A, 4),
        ] {
            let rs = RootSystem::build(ty, r).unwrap();
            let c = Constants::compute(&rs);
            let mut all: Vec<SRoot> = rs.roots.iter().map(|x| x.coeffs.clone()).collect();
            all.extend(rs.roots.iter().map(|x| neg(&x.coeffs)));
            let root = |v: &SRoot| v.iter().any(|&x| x != 0) && rs.is_root_or_negative(v);
            for x in &all {
                for y in &all {
                    let s = add(x, y);
                    if !root(&s) {
                        continue;
                    }
                    assert_eq!(c.general(x, y), -c.general(y, x));
                    assert_eq!(c.general(&neg(x), &neg(y)), -c.general(x, y));
                    let z = neg(&s);
                    assert_eq!(
                        c.general(x, y) * c.len2(x),
                        c.general(y, &z) * c.len2(&z),
                        "{ty}{r} triangle"
                    );
                    for w in &all {
                        let d = neg(&add(&s, w));
                        if !root(&d) || [x, y, w].iter().any(|u| add(u, &d).iter().all(|&k| k == 0))
                        {
                            continue;
                        }
                        if add(x, w).iter().all(|&k| k == 0) || add(y, w).iter().all(|&k| k == 0) {
                            continue;
                        }
                        let term = |p: &SRoot, q: &SRoot, u: &SRoot, v: &SRoot| -> Ratio<i64> {
                            let pq = add(p, q);
                            if !root(&pq) {
                                return Ratio::from_integer(0);
                            }
                            Ratio::new(c.general(p, q) * c.general(u, v), c.len2(&pq))
                        };
                        let total = term(x, y, w, &d) + term(y, w, x, &d) + term(w, x, y, &d);
                        assert_eq!(total, Ratio::from_integer(0), "{ty}{r} four-term");
                    }
                }
            }
        }
    }

    #[test]
    fn a2_single_term() {
        let t = table(RootType::A, 2, 5);
        let ts = t.terms(0, 1);
        assert_eq!(ts.len(), 1);
        assert_eq!((ts[0].root, ts[0].coeff.abs(), ts[0].a, ts[0].b), (2, 1, 1, 1));
    }

    #[test]
    fn b2_terms() {
        let t = table(RootType::B, 2, 2);
        // [x_2, x_3]: only α_1+2α_2 with |c| = 2, vanishing mod 2.
        let ts = t.terms(1, 2);
        assert_eq!(ts.len(), 1);
        assert_eq!((ts[0].root, ts[0].coeff.abs()), (3, 2));
        assert!(t.terms_mod_p(1, 2).is_empty());
        // [x_1, x_2] keeps both terms mod 2.
        let ts = t.terms_mod_p(0, 1);
        assert_eq!(ts.iter().map(|x| (x.root, x.a, x.b)).collect::<Vec<_>>(), vec![(2, 1, 1), (3, 1, 2)]);
        assert_eq!(table(RootType::B, 2, 3).terms_mod_p(1, 2).len(), 1);
    }

    #[test]
    fn coefficient_invariants() {
        let ok = [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (3, 2), (2, 3)];
        for (ty, r) in all_types() {
            let t = table(ty, r, 2);
            for i in 0..t.len() {
                for j in 0..t.len() {
                    if i == j {
                        continue;
                    }
                    for term in t.terms(i, j) {
                        assert!((1..=3).contains(&term.coeff.abs()));
                        assert!(ok.contains(&(term.a, term.b)));
                        let v = scale_add(
                            &t.rs.roots[i].coeffs,
                            term.a as i32,
                            &t.rs.roots[j].coeffs,
                            term.b as i32,
                        );
                        assert_eq!(t.rs.find(&v), Some(term.root));
                    }
                }
            }
        }
    }

    #[test]
    fn g2_p3_long_root_normal() {
        // Every commutator of α_1+2α_2 with a positive root vanishes exactly mod 3.
        let target = RootSystem::build(RootType::G, 2).unwrap().find(&[1, 2]).unwrap();
        for (p, all_vanish) in [(3, true), (2, false), (5, false)] {
            let t = table(RootType::G, 2, p);
            let vanish = (0..t.len())
                .filter(|&j| j != target)
                .all(|j| t.support(target, j).is_empty());
            assert_eq!(vanish, all_vanish, "p={p}");
        }
    }

    fn all_elements(col: &Collector<'_>) -> Vec<UElement> {
        let n = col.tab.len();
        let q = col.ctx.q() as usize;
        let total = q.pow(n as u32);
        (0..total)
            .map(|mut x| {
                let mut v = vec![0; n];
                for c in v.iter_mut() {
                    *c = (x % q) as Elem;
                    x /= q;
                }
                v
            })
            .collect()
    }

    #[test]
    fn group_axioms_exhaustive() {
        for (ty, r, f) in [(RootType::B, 2, 1), (RootType::A, 2, 2)] {
            let t = table(ty, r, 2);
            let ctx = FieldCtx::new(f).unwrap();
            let col = Collector::new(&t, &ctx).unwrap();
            let els = all_elements(&col);
            let e = col.identity();
            for u in &els {
                assert_eq!(&col.mul(&e, u), u);
                assert_eq!(&col.mul(u, &e), u);
                assert_eq!(col.mul(u, &col.inverse(u)), e);
                for v in &els {
                    let uv = col.mul(u, v);
                    for w in &els {
                        assert_eq!(col.mul(&uv, w), col.mul(u, &col.mul(v, w)));
                    }
                }
            }
        }
    }

    #[test]
    fn b2_commutator_by_expansion() {
        let t = table(RootType::B, 2, 2);
        let ctx = FieldCtx::new(1).unwrap();
        let col = Collector::new(&t, &ctx).unwrap();
        let c = col.commutator(0, 1, 1, 1);
        assert_eq!(c, vec![0, 0, 1, 1]);
        for i in 0..4 {
            for j in 0..4 {
                for tv in 0..2 {
                    for sv in 0..2 {
                        let g = col.group_commutator(&col.root_element(i, tv), &col.root_element(j, sv));
                        if i != j {
                            assert_eq!(g, col.commutator(i, tv, j, sv));
                        }
                    }
                }
            }
        }
        assert_eq!(col.commutator(1, 1, 2, 1), col.identity());
        assert_eq!(col.commutator(0, 0, 1, 1), col.identity());
    }

    #[test]
    fn commutator_matches_group_commutator_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for (ty, r) in [(RootType::B, 3), (RootType::C, 3), (RootType::F, 4), (RootType::G, 2), (RootType::D, 4)] {
            let t = table(ty, r, 2);
            let ctx = FieldCtx::new(2).unwrap();
            let col = Collector::new(&t, &ctx).unwrap();
            for i in 0..t.len() {
                for j in 0..t.len() {
                    if i == j {
                        continue;
                    }
                    let (tv, sv) = (rng.gen_range(1..4), rng.gen_range(1..4));
                    let g = col.group_commutator(&col.root_element(i, tv), &col.root_element(j, sv));
                    assert_eq!(g, col.commutator(i, tv, j, sv), "{ty}{r} ({i},{j})");
                }
            }
            let n = t.len();
            for _ in 0..200 {
                let mut rnd = || (0..n).map(|_| rng.gen_range(0..4)).collect::<Vec<Elem>>();
                let (u, v, w) = (rnd(), rnd(), rnd());
                assert_eq!(col.mul(&col.mul(&u, &v), &w), col.mul(&u, &col.mul(&v, &w)));
            }
        }
    }

    #[test]
    fn dump_lists_pairs() {
        let t = table(RootType::B, 2, 2);
        let d = t.dump(true);
        assert!(d.starts_with("1 2 -> (3, "));
        assert!(!d.contains("\n2 3 ->"));
    }

    #[test]
    fn rejects_non_prime() {
        let rs = RootSystem::build(RootType::A, 2).unwrap();
        assert!(CommutatorTable::build(&rs, 4).is_err());
    }
}
