//! Character counts of a heartless nonabelian core over a concrete field.
//!
//! With `X = X_I`, `Y = X_J` and `H = X_{S∖I}`, a linear character
//! `λ = φ∘(Σ a_γ ·)` of `X_Z` (all `a_γ ≠ 0`) determines stabilizers
//! `X′ ⊆ X` and `Y′ ⊆ Y` through the equation
//! `φ(Σ a_γ s_h^b t_k^c) = 1`, read off the commutators `[y, x] ∈ X_Z`.
//! The characters of `X_S` over `λ` correspond to those of
//! `G = H X′ / Ỹ ker λ` over `λ`, induced up with degree factor
//! `q^{|I|} / |X′|`. In every core of rank at most 4 the group `G` has the
//! central subgroup `M = Y′ × X_Z/ker λ` with `G/M` abelian, so each
//! extension `μ` of `λ` to `M` carries `|R_μ : M|` characters of degree
//! `√|G : R_μ|`, where `R_μ` is the radical of `(g, h) ↦ μ([g, h])`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chevalley::{Collector, CommutatorTable, UElement};
use crate::coregraph::{ArmLeg, CoreView};
use crate::error::{Error, Result};
use crate::gfq::{Elem, FieldCtx};
use crate::rootset::RootSet;

/// One term `a_γ s_{j_h}^b t_{i_k}^c` of the stabilizer equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqTerm {
    /// Position of the `J` root.
    pub h: usize,
    /// Position of the `I` root.
    pub k: usize,
    /// Position of the `Z` root `γ`.
    pub z: usize,
    /// Exponent of `s`.
    pub b: u32,
    /// Exponent of `t`.
    pub c: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerEquation {
    pub i_roots: Vec<usize>,
    pub j_roots: Vec<usize>,
    pub z_roots: Vec<usize>,
    pub terms: Vec<EqTerm>,
    /// Hash invariant under relabelling of `I`, `J` and `Z`.
    pub signature: String,
}

impl fmt::Display for StabilizerEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups = Vec::new();
        for (h, &jr) in self.j_roots.iter().enumerate() {
            let inner: Vec<String> = self
                .terms
                .iter()
                .filter(|t| t.h == h)
                .map(|t| {
                    let mut m = format!("a{} t{}", self.z_roots[t.z] + 1, self.i_roots[t.k] + 1);
                    if t.c > 1 {
                        m.push_str(&format!("^{}", t.c));
                    }
                    if t.b > 1 {
                        m.push_str(&format!(" s{}", jr + 1));
                        if t.b > 2 {
                            m.push_str(&format!("^{}", t.b - 1));
                        }
                    }
                    m
                })
                .collect();
            if !inner.is_empty() {
                groups.push(format!("s{}({})", jr + 1, inner.join(" + ")));
            }
        }
        write!(f, "φ({}) = 1", groups.join(" + "))
    }
}

/// Reads the stabilizer equation off the commutators `[x_j(s), x_i(t)]`.
pub fn extract_equation(tab: &CommutatorTable, view: &CoreView, al: &ArmLeg) -> Result<StabilizerEquation> {
    let i_roots: Vec<usize> = al.i.iter().collect();
    let j_roots: Vec<usize> = al.j.iter().collect();
    let z_roots: Vec<usize> = view.z.iter().collect();
    let mut terms = Vec::new();
    for (h, &jr) in j_roots.iter().enumerate() {
        for (k, &ir) in i_roots.iter().enumerate() {
            for t in tab.terms_mod_p(jr, ir) {
                if view.kill.contains(t.root) {
                    continue;
                }
                let z = z_roots.iter().position(|&r| r == t.root).ok_or_else(|| {
                    Error::Consistency(format!(
                        "commutator of α{} and α{} has a term at α{} outside Z",
                        jr + 1,
                        ir + 1,
                        t.root + 1
                    ))
                })?;
                if !(1..=2).contains(&t.a) || !(1..=2).contains(&t.b) {
                    return Err(Error::Unsupported(format!("exponents ({}, {}) in the stabilizer equation", t.a, t.b)));
                }
                terms.push(EqTerm { h, k, z, b: t.a, c: t.b });
            }
        }
    }
    let signature = canonical_signature(i_roots.len(), j_roots.len(), z_roots.len(), &terms);
    Ok(StabilizerEquation {
        i_roots,
        j_roots,
        z_roots,
        terms,
        signature,
    })
}

/// Branching signature of an equation. Two equations get the same
/// signature when one becomes the other after relabelling `I`, `J` and `Z`,
/// substituting `x ↦ x^{2^e}` for single variables or parameters, raising
/// single terms to a power of 2 (which `φ` does not see), and exchanging the
/// roles of `s` and `t` within a component (terms linked through shared
/// positions). Each of these preserves the character counts.
pub fn canonical_signature(ni: usize, nj: usize, nz: usize, terms: &[EqTerm]) -> String {
    let mut forms: Vec<Vec<CanonTerm>> = components(terms)
        .into_iter()
        .map(|comp| {
            let swapped: Vec<EqTerm> = comp
                .iter()
                .map(|t| EqTerm {
                    h: t.k,
                    k: t.h,
                    z: t.z,
                    b: t.c,
                    c: t.b,
                })
                .collect();
            canonical_form(ni, nj, nz, &comp).min(canonical_form(nj, ni, nz, &swapped))
        })
        .collect();
    forms.sort();
    let mut hasher = Sha256::new();
    hasher.update(format!("{forms:?}"));
    hex::encode(&hasher.finalize()[..12])
}

/// `(h, k, z, exponent offsets of a, s, t)` after normalization.
type CanonTerm = (usize, usize, usize, i32, i32, i32);

fn components(terms: &[EqTerm]) -> Vec<Vec<EqTerm>> {
    let n = terms.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for x in 0..n {
        for y in 0..x {
            let (a, b) = (terms[x], terms[y]);
            if a.h == b.h || a.k == b.k || a.z == b.z {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<EqTerm>> = BTreeMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(terms[x]);
    }
    groups.into_values().collect()
}

/// Smallest normalized term list over all orderings of `I` and `J` (and of
/// terms sharing a `(J, I)` pair).
fn canonical_form(ni: usize, nj: usize, nz: usize, terms: &[EqTerm]) -> Vec<CanonTerm> {
    let mut best: Option<Vec<CanonTerm>> = None;
    for pi in permutations(ni) {
        for pj in permutations(nj) {
            let mut rel: Vec<EqTerm> = terms
                .iter()
                .map(|t| EqTerm {
                    h: pj[t.h],
                    k: pi[t.k],
                    ..*t
                })
                .collect();
            rel.sort_by_key(|t| (t.h, t.k));
            // Runs of terms with equal (h, k) may appear in any order.
            let mut runs: Vec<(usize, usize)> = Vec::new();
            let mut start = 0;
            for x in 1..=rel.len() {
                if x == rel.len() || (rel[x].h, rel[x].k) != (rel[start].h, rel[start].k) {
                    runs.push((start, x));
                    start = x;
                }
            }
            let mut orders = vec![rel.clone()];
            for &(lo, hi) in &runs {
                if hi - lo < 2 {
                    continue;
                }
                let mut next = Vec::new();
                for o in &orders {
                    for perm in permutations(hi - lo) {
                        let mut v = o.clone();
                        for (pos, &src) in perm.iter().enumerate() {
                            v[lo + pos] = o[lo + src];
                        }
                        next.push(v);
                    }
                }
                orders = next;
            }
            for o in orders {
                let form = normalize(&o, nz);
                if best.as_ref().map_or(true, |b| form < *b) {
                    best = Some(form);
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// Renames `Z` by first occurrence and removes the exponent shifts along a
/// breadth-first spanning tree of the term/variable incidence graph.
fn normalize(terms: &[EqTerm], nz: usize) -> Vec<CanonTerm> {
    let mut names: Vec<Option<usize>> = vec![None; nz];
    let mut next = 0;
    let zs: Vec<usize> = terms
        .iter()
        .map(|t| {
            *names[t.z].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    // Variables: 0 = parameter a_z, 1 = s_h, 2 = t_k.
    let var = |x: usize, role: usize| match role {
        0 => (0usize, zs[x]),
        1 => (1, terms[x].h),
        _ => (2, terms[x].k),
    };
    let label = |x: usize, role: usize| -> i32 {
        match role {
            0 => 0,
            1 => terms[x].b.trailing_zeros() as i32,
            _ => terms[x].c.trailing_zeros() as i32,
        }
    };
    let mut r: Vec<Option<i32>> = vec![None; terms.len()];
    let mut e: BTreeMap<(usize, usize), i32> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    for root in 0..terms.len() {
        if r[root].is_some() {
            continue;
        }
        r[root] = Some(0);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let rx = r[x].unwrap();
            for role in 0..3 {
                let v = var(x, role);
                if e.contains_key(&v) {
                    continue;
                }
                e.insert(v, -(label(x, role) + rx));
                for y in 0..terms.len() {
                    if r[y].is_none() && (0..3).any(|ro| var(y, ro) == v) {
                        let ro = (0..3).find(|&ro| var(y, ro) == v).unwrap();
                        r[y] = Some(-(label(y, ro) + e[&v]));
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    (0..terms.len())
        .map(|x| {
            let n = |role: usize| label(x, role) + r[x].unwrap() + e[&var(x, role)];
            (terms[x].h, terms[x].k, zs[x], n(0), n(1), n(2))
        })
        .collect()
}

/// All permutations of `0..n` (as position maps).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Character-degree histogram: `log₂(degree) → count`.
pub type Histogram = BTreeMap<u32, u128>;

/// Merges `b` into `a`.
pub fn merge(a: &mut Histogram, b: &Histogram) {
    for (&d, &c) in b {
        *a.entry(d).or_insert(0) += c;
    }
}

/// `Σ count · degree²` as a power-of-two weighted sum.
pub fn sum_of_squares(h: &Histogram) -> u128 {
    h.iter().map(|(&d, &c)| c << (2 * d)).sum()
}

/// Stabilizers for one parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilizers {
    /// `t`-vectors of the elements of `X′`.
    pub x_prime: Vec<Vec<Elem>>,
    /// `s`-vectors of the elements of `Y′`.
    pub y_prime: Vec<Vec<Elem>>,
    pub x_is_subgroup: bool,
    pub x_is_abelian: bool,
}

/// Eliminates over GF(2): returns the kernel basis of `x ↦ Σ x_i img_i`
/// as combination masks.
fn kernel(images: &[u64]) -> Vec<u64> {
    let mut pivots: Vec<(u64, u64)> = Vec::new();
    let mut ker = Vec::new();
    for (i, &img) in images.iter().enumerate() {
        let mut v = img;
        let mut combo = 1u64 << i;
        for &(p, pc) in &pivots {
            if v & (1u64 << (63 - p.leading_zeros())) != 0 {
                v ^= p;
                combo ^= pc;
            }
        }
        if v == 0 {
            ker.push(combo);
        } else {
            // Keep pivots with distinct leading bits, reduced against each other.
            let lead = 1u64 << (63 - v.leading_zeros());
            for (p, pc) in pivots.iter_mut() {
                if *p & lead != 0 {
                    *p ^= v;
                    *pc ^= combo;
                }
            }
            pivots.push((v, combo));
        }
    }
    ker
}

/// Reduced echelon basis of a GF(2) span: `(vector, pivot bit)` pairs, each
/// pivot bit set in exactly one vector.
fn echelon(vectors: &[u64]) -> Vec<(u64, u32)> {
    let mut basis: Vec<(u64, u32)> = Vec::new();
    for &v0 in vectors {
        let mut v = v0;
        for &(b, p) in &basis {
            if v >> p & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            let p = 63 - v.leading_zeros();
            for (b, _) in basis.iter_mut() {
                if *b >> p & 1 == 1 {
                    *b ^= v;
                }
            }
            basis.push((v, p));
        }
    }
    basis
}

/// Coordinates of `v` along an echelon basis, dropping the component in the
/// span of non-pivot unit vectors.
fn project(basis: &[(u64, u32)], mut v: u64) -> u64 {
    let mut coords = 0;
    for (idx, &(b, p)) in basis.iter().enumerate() {
        if v >> p & 1 == 1 {
            v ^= b;
            coords |= 1 << idx;
        }
    }
    coords
}

/// Per-core solver over a fixed field.
pub struct CoreSolver<'a> {
    pub eq: &'a StabilizerEquation,
    pub ctx: &'a FieldCtx,
    pub view: CoreView,
    col: Collector<'a>,
    f: u32,
}

impl<'a> CoreSolver<'a> {
    pub fn new(tab: &'a CommutatorTable, ctx: &'a FieldCtx, view: CoreView, eq: &'a StabilizerEquation) -> Result<Self> {
        let f = ctx.q().trailing_zeros();
        if (eq.i_roots.len().max(eq.j_roots.len()) as u32) * f > 63 {
            return Err(Error::Budget("stabilizer system too large for 64-bit elimination".into()));
        }
        let col = Collector::quotient(tab, ctx, tab.rs.all().difference(view.s))?;
        Ok(CoreSolver { eq, ctx, view, col, f })
    }

    fn monomial(&self, a: Elem, x: Elem, e: u32) -> Elem {
        self.ctx.mul(a, if e == 1 { x } else { self.ctx.sqr(x) })
    }

    /// GF(2)-images of the basis of the `t`-space (`for_x`) or the `s`-space.
    fn images(&self, a: &[Elem], for_x: bool) -> Vec<u64> {
        let (n_free, n_out) = if for_x {
            (self.eq.i_roots.len(), self.eq.j_roots.len())
        } else {
            (self.eq.j_roots.len(), self.eq.i_roots.len())
        };
        let f = self.f as usize;
        let mut out = Vec::with_capacity(n_free * f);
        for var in 0..n_free {
            for bit in 0..f {
                let x: Elem = 1 << bit;
                let mut img = 0u64;
                for o in 0..n_out {
                    // Linear and quadratic coefficients in the eliminated variable.
                    let (mut c1, mut c2) = (0, 0);
                    for t in &self.eq.terms {
                        let (free, out_idx, e_free, e_out) = if for_x { (t.k, t.h, t.c, t.b) } else { (t.h, t.k, t.b, t.c) };
                        if free != var || out_idx != o {
                            continue;
                        }
                        let m = self.monomial(a[t.z], x, e_free);
                        if e_out == 1 {
                            c1 ^= m;
                        } else {
                            c2 ^= m;
                        }
                    }
                    let v = self.ctx.sqr(c1) ^ c2;
                    img |= (v as u64) << (o * f);
                }
                out.push(img);
            }
        }
        out
    }

    fn unpack(&self, combo: u64, n: usize) -> Vec<Elem> {
        let f = self.f as usize;
        let mask = (1u64 << f) - 1;
        (0..n).map(|k| ((combo >> (k * f)) & mask) as Elem).collect()
    }

    fn pack(&self, v: &[Elem]) -> u64 {
        v.iter().enumerate().map(|(k, &x)| (x as u64) << (k * self.f as usize)).fold(0, |a, b| a | b)
    }

    fn span(basis: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64];
        for &b in basis {
            let n = out.len();
            for i in 0..n {
                out.push(out[i] ^ b);
            }
        }
        out
    }

    fn x_element(&self, t: &[Elem]) -> UElement {
        let mut w = self.col.identity();
        for (k, &r) in self.eq.i_roots.iter().enumerate() {
            w[r] = t[k];
        }
        w
    }

    fn lambda(&self, a: &[Elem], w: &[Elem]) -> u32 {
        let mut acc = 0;
        for (zi, &r) in self.eq.z_roots.iter().enumerate() {
            acc ^= self.ctx.mul(a[zi], w[r]);
        }
        self.ctx.trace(acc)
    }

    /// `X′` and `Y′` as GF(2)-kernel bases (packed coordinate vectors).
    fn kernels(&self, a: &[Elem]) -> (Vec<u64>, Vec<u64>) {
        (kernel(&self.images(a, true)), kernel(&self.images(a, false)))
    }

    /// Explicit stabilizer sets and the closure test of `X′`.
    pub fn solve_stabilizers(&self, a: &[Elem]) -> Stabilizers {
        let (kx, ky) = self.kernels(a);
        let ni = self.eq.i_roots.len();
        let nj = self.eq.j_roots.len();
        let xs: Vec<u64> = Self::span(&kx);
        let set: HashSet<u64> = xs.iter().copied().collect();
        let elems: Vec<UElement> = xs.iter().map(|&c| self.x_element(&self.unpack(c, ni))).collect();
        let i_set: RootSet = self.eq.i_roots.iter().copied().collect();
        let mut sub = true;
        let mut abelian = true;
        for u in &elems {
            for v in &elems {
                let w = self.col.mul(u, v);
                let outside = w.iter().enumerate().any(|(r, &x)| x != 0 && !i_set.contains(r));
                let t: Vec<Elem> = self.eq.i_roots.iter().map(|&r| w[r]).collect();
                if outside || !set.contains(&self.pack(&t)) {
                    sub = false;
                }
                if w != self.col.mul(v, u) {
                    abelian = false;
                }
            }
        }
        Stabilizers {
            x_prime: xs.iter().map(|&c| self.unpack(c, ni)).collect(),
            y_prime: Self::span(&ky).iter().map(|&c| self.unpack(c, nj)).collect(),
            x_is_subgroup: sub,
            x_is_abelian: abelian,
        }
    }

    /// Histogram (log₂ degree in `X_S` → count) of `Irr(X_S | λ_a)`.
    pub fn characters_over(&self, a: &[Elem]) -> Result<Histogram> {
        let (kx, ky) = self.kernels(a);
        let ni = self.eq.i_roots.len();
        let dx = kx.len() as u32;
        let dy = ky.len() as u32;
        let base = self.f * ni as u32 - dx;
        let mut hist = Histogram::new();
        if dx == 0 {
            hist.insert(base, 1u128 << dy);
            return Ok(hist);
        }
        let echo = echelon(&ky);
        let xs: Vec<UElement> = Self::span(&kx).iter().map(|&c| self.x_element(&self.unpack(c, ni))).collect();
        let n = xs.len();
        let i_set: RootSet = self.eq.i_roots.iter().copied().collect();
        let j_set: RootSet = self.eq.j_roots.iter().copied().collect();
        let mut form = vec![(0u64, 0u32); n * n];
        for x in 0..n {
            for y in (x + 1)..n {
                let w = self.col.group_commutator(&xs[x], &xs[y]);
                for (r, &v) in w.iter().enumerate() {
                    if v != 0 && !self.view.z.contains(r) && !j_set.contains(r) {
                        let what = if i_set.contains(r) { "G/M is nonabelian" } else { "commutator leaves H" };
                        return Err(Error::Unsupported(format!(
                            "{what}: [x, x′] has a coordinate at α{} for a = {a:?}",
                            r + 1
                        )));
                    }
                }
                let yv: Vec<Elem> = self.eq.j_roots.iter().map(|&r| w[r]).collect();
                let e = (project(&echo, self.pack(&yv)), self.lambda(a, &w));
                form[x * n + y] = e;
                form[y * n + x] = e;
            }
        }
        // Characters μ of Y′ only matter through the span of the Y′-parts.
        let wspan = echelon(&form.iter().map(|e| e.0).collect::<Vec<_>>());
        let w = wspan.len() as u32;
        let reduced: Vec<(u64, u32)> = form.iter().map(|&(y, c)| (project(&wspan, y), c)).collect();
        for psi in 0u64..(1 << w) {
            let r = (0..n)
                .filter(|&x| (0..n).all(|y| ((reduced[x * n + y].0 & psi).count_ones() + reduced[x * n + y].1) % 2 == 0))
                .count();
            let lr = r.trailing_zeros();
            if r != 1 << lr || (dx - lr) % 2 != 0 {
                return Err(Error::Consistency(format!("radical of order {r} in an |X′| = {n} quotient")));
            }
            *hist.entry(base + (dx - lr) / 2).or_insert(0) += (r as u128) << (dy - w);
        }
        Ok(hist)
    }

    /// Number of parameter tuples `(F_q^×)^{|Z|}`.
    pub fn tuple_count(&self) -> u64 {
        ((self.ctx.q() - 1) as u64).pow(self.eq.z_roots.len() as u32)
    }

    pub fn tuple(&self, mut idx: u64) -> Vec<Elem> {
        let m = (self.ctx.q() - 1) as u64;
        (0..self.eq.z_roots.len())
            .map(|_| {
                let v = (idx % m) as Elem + 1;
                idx /= m;
                v
            })
            .collect()
    }

    /// Histogram of `Irr(X_S)_Z`, summed over all parameter tuples.
    pub fn histogram(&self) -> Result<Histogram> {
        (0..self.tuple_count())
            .into_par_iter()
            .map(|i| self.characters_over(&self.tuple(i)))
            .try_fold(Histogram::new, |mut acc, h| {
                merge(&mut acc, &h?);
                Ok(acc)
            })
            .try_reduce(Histogram::new, |mut a, b| {
                merge(&mut a, &b);
                Ok(a)
            })
    }

    /// Direct check of `x ∈ X′` against the group: `λ([y, x]) = 1` for all `y ∈ Y`.
    pub fn stabilizes_directly(&self, a: &[Elem], t: &[Elem]) -> bool {
        let x = self.x_element(t);
        let nj = self.eq.j_roots.len();
        let q = self.ctx.q() as u64;
        (0..q.pow(nj as u32)).all(|mut idx| {
            let mut y = self.col.identity();
            for &r in &self.eq.j_roots {
                y[r] = (idx % q) as Elem;
                idx /= q;
            }
            self.lambda(a, &self.col.group_commutator(&y, &x)) == 0
        })
    }

    /// Direct evaluation of the equation at `(s, t)`: `true` iff `φ(…) = 1`.
    pub fn equation_holds(&self, a: &[Elem], s: &[Elem], t: &[Elem]) -> bool {
        let mut acc = 0;
        for term in &self.eq.terms {
            let sv = self.ctx.pow(s[term.h], term.b as u64);
            let tv = self.ctx.pow(t[term.k], term.c as u64);
            acc ^= self.ctx.mul(a[term.z], self.ctx.mul(sv, tv));
        }
        self.ctx.trace(acc) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_projection() {
        // Images: e0 ↦ 1, e1 ↦ 1, e2 ↦ 2; the kernel is spanned by e0 + e1.
        assert_eq!(kernel(&[1, 1, 2]), vec![0b011]);
        let basis = echelon(&[0b110, 0b011]);
        assert_eq!(basis.len(), 2);
        for v in [0b110u64, 0b011, 0b101] {
            let c = project(&basis, v);
            let back = basis.iter().enumerate().filter(|(i, _)| c >> i & 1 == 1).fold(0, |acc, (_, &(b, _))| acc ^ b);
            assert_eq!(back, v);
        }
    }

    #[test]
    fn signature_ignores_relabelling() {
        let t = |h, k, z, b, c| EqTerm { h, k, z, b, c };
        let a = [t(0, 0, 0, 2, 1), t(0, 1, 1, 1, 1), t(1, 1, 2, 2, 1), t(1, 0, 3, 1, 1)];
        let b = [t(1, 1, 3, 2, 1), t(1, 0, 2, 1, 1), t(0, 0, 1, 2, 1), t(0, 1, 0, 1, 1)];
        let c = [t(0, 0, 0, 1, 2), t(0, 1, 1, 1, 1), t(1, 1, 2, 2, 1), t(1, 0, 3, 1, 1)];
        // Two disjoint edges versus a 4-cycle, with the same local degrees.
        let d = [t(0, 0, 0, 2, 1), t(0, 0, 1, 1, 1), t(1, 1, 2, 2, 1), t(1, 1, 3, 1, 1)];
        let e = [t(0, 0, 0, 2, 1), t(0, 1, 1, 1, 1), t(1, 1, 2, 2, 1), t(1, 0, 3, 1, 1)];
        assert_eq!(canonical_signature(2, 2, 4, &a), canonical_signature(2, 2, 4, &b));
        assert_ne!(canonical_signature(2, 2, 4, &a), canonical_signature(2, 2, 4, &c));
        assert_ne!(canonical_signature(2, 2, 4, &d), canonical_signature(2, 2, 4, &e));
    }
}
