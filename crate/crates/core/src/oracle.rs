//! Brute-force verification on explicitly enumerated groups: conjugacy-class
//! counts, abelianization orders and per-core character counts.

use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::chevalley::{Collector, CommutatorTable, UElement};
use crate::error::{Error, Result};
use crate::gfq::{Elem, FieldCtx};
use crate::reduction::Core;
use crate::rootset::RootSet;

/// Largest group order enumerated without the expensive flag.
pub const DEFAULT_BUDGET_LOG2: u32 = 20;
/// Hard ceiling on the group order.
pub const MAX_BUDGET_LOG2: u32 = 24;

/// The group `X_S` realized as all coordinate vectors over `support`,
/// with every other root killed.
pub struct ExplicitGroup<'a> {
    pub support: RootSet,
    pub ctx: &'a FieldCtx,
    col: Collector<'a>,
    roots: Vec<usize>,
    f: u32,
    gens: OnceLock<Vec<UElement>>,
}

impl<'a> ExplicitGroup<'a> {
    /// `support` must be closed modulo its complement (a quattern).
    pub fn new(tab: &'a CommutatorTable, ctx: &'a FieldCtx, support: RootSet, budget_log2: u32) -> Result<Self> {
        let f = ctx.q().trailing_zeros();
        let bits = f * support.len() as u32;
        let limit = budget_log2.min(MAX_BUDGET_LOG2);
        if bits > limit {
            return Err(Error::Budget(format!("group of order 2^{bits} exceeds 2^{limit}")));
        }
        let col = Collector::quotient(tab, ctx, tab.rs.all().difference(support))?;
        Ok(ExplicitGroup {
            support,
            ctx,
            col,
            roots: support.iter().collect(),
            f,
            gens: OnceLock::new(),
        })
    }

    /// Whole `U`.
    pub fn full(tab: &'a CommutatorTable, ctx: &'a FieldCtx, budget_log2: u32) -> Result<Self> {
        ExplicitGroup::new(tab, ctx, tab.rs.all(), budget_log2)
    }

    pub fn order_log2(&self) -> u32 {
        self.f * self.roots.len() as u32
    }

    fn size(&self) -> usize {
        1usize << self.order_log2()
    }

    fn decode(&self, mut idx: usize) -> UElement {
        let mut w = self.col.identity();
        let mask = (1usize << self.f) - 1;
        for &r in &self.roots {
            w[r] = (idx & mask) as Elem;
            idx >>= self.f;
        }
        w
    }

    fn encode(&self, w: &[Elem]) -> usize {
        self.roots
            .iter()
            .rev()
            .fold(0, |acc, &r| (acc << self.f) | w[r] as usize)
    }

    /// Generators `x_α(2^b)` for `α` in the support and `b < f`.
    pub fn generators(&self) -> Vec<UElement> {
        let mut out = Vec::new();
        for &r in &self.roots {
            for b in 0..self.f {
                out.push(self.col.root_element(r, 1 << b));
            }
        }
        out
    }

    /// A small generating set: generators `x_α(2^b)` are taken in root
    /// order and kept only when they enlarge the subgroup generated so far.
    /// Computed once per group.
    pub fn generating_set(&self) -> &[UElement] {
        self.gens.get_or_init(|| self.find_generating_set())
    }

    fn find_generating_set(&self) -> Vec<UElement> {
        let n = self.size();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut members = vec![0u32];
        let mut gens: Vec<UElement> = Vec::new();
        for g in self.generators() {
            if members.len() == n {
                break;
            }
            if seen[self.encode(&g)] {
                continue;
            }
            gens.push(g);
            let ops: Vec<Box<dyn Fn(&[Elem]) -> UElement + '_>> = gens
                .iter()
                .map(|g| Box::new(move |x: &[Elem]| self.col.mul(x, g)) as Box<dyn Fn(&[Elem]) -> UElement>)
                .collect();
            self.extend_closure(&mut seen, &mut members, &ops, gens.len() - 1);
        }
        gens
    }

    /// Extends `members`, already closed under `ops[..old]`, to its closure
    /// under all of `ops`.
    fn extend_closure(&self, seen: &mut [bool], members: &mut Vec<u32>, ops: &[Box<dyn Fn(&[Elem]) -> UElement + '_>], old: usize) {
        let mut stack: Vec<(u32, u32)> = members.iter().map(|&m| (m, old as u32)).collect();
        while let Some((idx, from)) = stack.pop() {
            let x = self.decode(idx as usize);
            for op in &ops[from as usize..] {
                let k = self.encode(&op(&x));
                if !seen[k] {
                    seen[k] = true;
                    members.push(k as u32);
                    stack.push((k as u32, 0));
                }
            }
        }
    }

    /// Number of conjugacy classes, as orbits of conjugation by a generating
    /// set. The union-find runs in parallel with lock-free links to the
    /// smaller root; the orbit partition, and so the count, does not depend
    /// on the schedule.
    pub fn conjugacy_class_count(&self) -> usize {
        let n = self.size();
        let parent: Vec<AtomicU32> = (0..n as u32).map(AtomicU32::new).collect();
        let gens = self.generating_set();
        (0..n).into_par_iter().for_each(|idx| {
            let u = self.decode(idx);
            for g in gens {
                let v = self.encode(&self.col.conjugate(&u, g));
                if v != idx {
                    union(&parent, idx as u32, v as u32);
                }
            }
        });
        (0..n).filter(|&i| find(&parent, i as u32) == i as u32).count()
    }

    /// `|G / [G, G]|`, with `[G, G]` built as the normal closure of the
    /// commutators of a generating set. Commutators already in the closure
    /// are skipped, so each one kept at least doubles it.
    pub fn abelianization_order(&self) -> u128 {
        let gens = self.generating_set();
        let n = self.size();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut members = vec![0u32];
        let mut ops: Vec<Box<dyn Fn(&[Elem]) -> UElement + '_>> = Vec::new();
        for g in gens {
            ops.push(Box::new(move |x: &[Elem]| self.col.conjugate(x, g)));
        }
        for a in gens {
            for b in gens {
                let c = self.col.group_commutator(a, b);
                if seen[self.encode(&c)] {
                    continue;
                }
                ops.push(Box::new(move |x: &[Elem]| self.col.mul(x, &c)));
                let old = ops.len() - 1;
                self.extend_closure(&mut seen, &mut members, &ops, old);
            }
        }
        (n as u128) / members.len() as u128
    }
}

fn find(parent: &[AtomicU32], mut x: u32) -> u32 {
    loop {
        let p = parent[x as usize].load(Ordering::Acquire);
        if p == x {
            return x;
        }
        let gp = parent[p as usize].load(Ordering::Acquire);
        // Path halving; a failed exchange only means someone else moved it.
        let _ = parent[x as usize].compare_exchange(p, gp, Ordering::AcqRel, Ordering::Acquire);
        x = gp;
    }
}

fn union(parent: &[AtomicU32], a: u32, b: u32) {
    let (mut a, mut b) = (a, b);
    loop {
        a = find(parent, a);
        b = find(parent, b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if parent[hi as usize]
            .compare_exchange(hi, lo, Ordering::AcqRel, Ordering::Acquire)
            .is_ok()
        {
            return;
        }
    }
}

/// Number of conjugacy classes of `U` over `ctx`.
pub fn class_count_of_u(tab: &CommutatorTable, ctx: &FieldCtx, budget_log2: u32) -> Result<usize> {
    Ok(ExplicitGroup::full(tab, ctx, budget_log2)?.conjugacy_class_count())
}

/// `|Irr(X_S)_Z|` for a core, by inclusion–exclusion over the quotients
/// `X_S / X_T` for `T ⊆ Z`: `Σ_T (−1)^{|T|} k(X_S / X_T)`. The core's `Z`
/// includes its direct-factor roots.
pub fn class_count_of_core(tab: &CommutatorTable, ctx: &FieldCtx, core: &Core, budget_log2: u32) -> Result<i128> {
    let z: Vec<usize> = core.z.iter().collect();
    let mut total = 0i128;
    for mask in 0u32..(1 << z.len()) {
        let t: RootSet = z.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &r)| r).collect();
        let k = ExplicitGroup::new(tab, ctx, core.s.difference(t), budget_log2)?.conjugacy_class_count() as i128;
        total += if t.len() % 2 == 0 { k } else { -k };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{RootSystem, RootType};

    fn group_classes(ty: RootType, r: usize, f: u32) -> (usize, u128) {
        let t = CommutatorTable::build(&RootSystem::build(ty, r).unwrap(), 2).unwrap();
        let ctx = FieldCtx::new(f).unwrap();
        let g = ExplicitGroup::full(&t, &ctx, 20).unwrap();
        (g.conjugacy_class_count(), g.abelianization_order())
    }

    #[test]
    fn heisenberg() {
        // UA2(2) is dihedral of order 8; UA2(4) has q² + q − 1 = 19 classes.
        assert_eq!(group_classes(RootType::A, 2, 1), (5, 4));
        assert_eq!(group_classes(RootType::A, 2, 2), (19, 16));
    }

    #[test]
    fn abelian_support() {
        let t = CommutatorTable::build(&RootSystem::build(RootType::B, 2).unwrap(), 2).unwrap();
        let ctx = FieldCtx::new(2).unwrap();
        // The two highest roots of B2 commute with each other.
        let top = t.rs.all().difference(RootSet::from_labels(&[1, 2]));
        let g = ExplicitGroup::new(&t, &ctx, top, 20).unwrap();
        assert_eq!(g.conjugacy_class_count(), 16);
        assert_eq!(g.abelianization_order(), 16);
    }

    #[test]
    fn generating_sets() {
        // Simple root elements generate U in type A.
        let a3 = CommutatorTable::build(&RootSystem::build(RootType::A, 3).unwrap(), 2).unwrap();
        let ctx = FieldCtx::new(1).unwrap();
        assert_eq!(ExplicitGroup::full(&a3, &ctx, 20).unwrap().generating_set().len(), 3);
        let b2 = CommutatorTable::build(&RootSystem::build(RootType::B, 2).unwrap(), 2).unwrap();
        let ctx = FieldCtx::new(2).unwrap();
        let g = ExplicitGroup::full(&b2, &ctx, 20).unwrap();
        assert!(g.generating_set().len() < g.generators().len());
    }

    #[test]
    fn budget_is_enforced() {
        let t = CommutatorTable::build(&RootSystem::build(RootType::F, 4).unwrap(), 2).unwrap();
        let ctx = FieldCtx::new(1).unwrap();
        assert!(matches!(ExplicitGroup::full(&t, &ctx, 20), Err(Error::Budget(_))));
    }
}
