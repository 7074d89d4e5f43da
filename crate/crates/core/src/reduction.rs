//! Reduction of `Irr(U)_Σ` to abelian and nonabelian cores.
//!
//! Each visited tuple `(S, Z, A, L, K)` describes the quattern `X_S` obtained
//! from `U / X_{N_Σ}` by removing the roots `A` (inductions) and killing the
//! roots `K` (inflations and splits).

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::CommutatorTable;
use crate::error::{Error, Result};
use crate::patterns::{center_of, commutator_image, direct_factors_of, support_mod, RepresentableSet};
use crate::rootset::RootSet;

/// One move of the reduction log.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Move {
    /// Induction over `β` and inflation over `δ`, with `[x_β, x_δ] ⊆ X_γ`.
    Reduce { beta: usize, delta: usize, gamma: usize },
    /// Split on a central root `γ`: either `γ` is killed or added to `Z`.
    Split { gamma: usize, killed: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Core {
    pub s: RootSet,
    pub z: RootSet,
    pub a: RootSet,
    pub l: RootSet,
    pub k: RootSet,
    /// The normal set of the representable set this core came from.
    pub n_sigma: RootSet,
    pub abelian: bool,
    /// Direct-factor roots split off a nonabelian core (empty when abelian).
    pub d: RootSet,
    pub path: Vec<Move>,
}

impl Core {
    /// Roots dropped in the quotient defining `X_S`.
    pub fn kill(&self) -> RootSet {
        self.n_sigma.union(self.k)
    }

    /// Each character degree of this core is multiplied by `q^{|A|}`.
    pub fn degree_multiplier(&self) -> usize {
        self.a.len()
    }

    /// `S ∖ D` for a nonabelian core.
    pub fn reduced_s(&self) -> RootSet {
        self.s.difference(self.d)
    }

    /// `Z ∖ D` for a nonabelian core.
    pub fn reduced_z(&self) -> RootSet {
        self.z.difference(self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoreForm {
    pub z: usize,
    pub m: usize,
    pub c: usize,
}

impl std::fmt::Display for CoreForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}, {}]", self.z, self.m, self.c)
    }
}

/// Pairs `i < j` in `S` whose commutator is nontrivial modulo `kill`.
pub fn nontrivial_pairs(tab: &CommutatorTable, s: RootSet, kill: RootSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in s.iter() {
        for j in s.iter() {
            if i < j && !support_mod(tab, i, j, kill).is_empty() {
                out.push((i, j));
            }
        }
    }
    out
}

/// `[z, m, c]` of a core, computed on `S ∖ D` and `Z ∖ D`.
pub fn core_form(tab: &CommutatorTable, core: &Core) -> CoreForm {
    let s = core.reduced_s();
    CoreForm {
        z: core.reduced_z().len(),
        m: s.len(),
        c: nontrivial_pairs(tab, s, core.kill()).len(),
    }
}

/// Direct check of the three induction/inflation conditions for `(β, δ, γ)`.
pub fn verify_reduce_move(
    tab: &CommutatorTable,
    s: RootSet,
    kill: RootSet,
    z: RootSet,
    beta: usize,
    delta: usize,
    gamma: usize,
) -> bool {
    if !z.contains(gamma) || !s.contains(beta) || !s.contains(delta) || beta == delta {
        return false;
    }
    if beta == gamma || delta == gamma {
        return false;
    }
    let single: Vec<_> = tab
        .terms_mod_p(beta, delta)
        .iter()
        .filter(|t| !kill.contains(t.root))
        .collect();
    if single.len() != 1 || single[0].root != gamma {
        return false;
    }
    for x in s.iter() {
        for y in s.iter() {
            if x != y && support_mod(tab, x, y, kill).contains(beta) {
                return false;
            }
        }
        if x != beta && x != delta && !support_mod(tab, x, delta, kill).is_empty() {
            return false;
        }
    }
    true
}

/// Pair `(β, δ, γ)` chosen by the reduction: minimal `β` among the pairs with
/// maximal `δ`.
fn find_reduce_move(tab: &CommutatorTable, s: RootSet, kill: RootSet, z: RootSet) -> Option<(usize, usize, usize)> {
    let image = commutator_image(tab, s, kill);
    let betas = s.difference(image);
    let mut deltas: Vec<usize> = s.iter().collect();
    deltas.reverse();
    for delta in deltas {
        // Condition 3: δ commutes with everything but β, so at most one
        // root of S fails to commute with δ.
        let partners: Vec<usize> = s
            .iter()
            .filter(|&x| x != delta && !support_mod(tab, x, delta, kill).is_empty())
            .collect();
        let cands: Vec<usize> = match partners.as_slice() {
            [] => continue,
            [b] => vec![*b],
            _ => continue,
        };
        for beta in cands {
            if !betas.contains(beta) {
                continue;
            }
            let sup = support_mod(tab, beta, delta, kill);
            if sup.len() != 1 {
                continue;
            }
            let gamma = sup.min().unwrap();
            if z.contains(gamma) && gamma != beta && gamma != delta {
                return Some((beta, delta, gamma));
            }
        }
    }
    None
}

struct Tuple {
    s: RootSet,
    z: RootSet,
    a: RootSet,
    l: RootSet,
    k: RootSet,
    path: Vec<Move>,
}

/// Runs the reduction on one representable set.
pub fn reduce(tab: &CommutatorTable, rep: &RepresentableSet) -> Result<Vec<Core>> {
    let n_sigma = rep.n_sigma;
    let s0 = tab.rs.all().difference(n_sigma);
    let z0 = center_of(tab, s0, n_sigma);
    if z0 != rep.sigma {
        return Err(Error::Consistency(format!(
            "center of U/X_N is {z0:?}, representable set says {:?}",
            rep.sigma
        )));
    }
    let mut stack = vec![Tuple {
        s: s0,
        z: z0,
        a: RootSet::EMPTY,
        l: RootSet::EMPTY,
        k: RootSet::EMPTY,
        path: Vec::new(),
    }];
    let mut out = Vec::new();
    while let Some(c) = stack.pop() {
        let kill = n_sigma.union(c.k);
        let center = center_of(tab, c.s, kill);
        if !c.z.is_subset(center) {
            return Err(Error::Consistency(format!("Z {:?} not central in {:?}", c.z, c.s)));
        }
        // Step 1.
        if center == c.s {
            out.push(Core {
                s: c.s,
                z: c.z,
                a: c.a,
                l: c.l,
                k: c.k,
                n_sigma,
                abelian: true,
                d: RootSet::EMPTY,
                path: c.path,
            });
            continue;
        }
        // Step 2.
        if let Some((beta, delta, gamma)) = find_reduce_move(tab, c.s, kill, c.z) {
            if !verify_reduce_move(tab, c.s, kill, c.z, beta, delta, gamma) {
                return Err(Error::Consistency(format!(
                    "reduction move ({beta}, {delta}, {gamma}) fails its conditions"
                )));
            }
            let mut path = c.path;
            path.push(Move::Reduce { beta, delta, gamma });
            stack.push(Tuple {
                s: c.s.without(beta).without(delta),
                z: c.z,
                a: c.a.with(beta),
                l: c.l.with(delta),
                k: c.k.with(delta),
                path,
            });
            continue;
        }
        // Step 3.
        let d = direct_factors_of(tab, c.s, kill);
        if let Some(gamma) = center.difference(c.z.union(d)).max() {
            let mut p_center = c.path.clone();
            p_center.push(Move::Split { gamma, killed: false });
            let mut p_kill = c.path;
            p_kill.push(Move::Split { gamma, killed: true });
            // Pushed in reverse so the killed branch is processed first.
            stack.push(Tuple {
                s: c.s,
                z: c.z.with(gamma),
                a: c.a,
                l: c.l,
                k: c.k,
                path: p_center,
            });
            stack.push(Tuple {
                s: c.s.without(gamma),
                z: c.z,
                a: c.a,
                l: c.l,
                k: c.k.with(gamma),
                path: p_kill,
            });
            continue;
        }
        // Step 4. Roots of D outside Z are split like Step 3, so every
        // emitted core has D ⊆ Z and its abelian factor contributes only
        // nontrivial linear characters.
        let free: Vec<usize> = d.difference(c.z).iter().collect();
        for mask in 0u32..(1 << free.len()) {
            let mut s = c.s;
            let mut z = c.z;
            let mut k = c.k;
            let mut path = c.path.clone();
            for (bit, &gamma) in free.iter().enumerate().rev() {
                let killed = mask & (1 << bit) == 0;
                if killed {
                    s.remove(gamma);
                    k.insert(gamma);
                } else {
                    z.insert(gamma);
                }
                path.push(Move::Split { gamma, killed });
            }
            out.push(Core {
                s,
                z,
                a: c.a,
                l: c.l,
                k,
                n_sigma,
                abelian: false,
                d: d.intersection(s),
                path,
            });
        }
    }
    Ok(out)
}

/// Cores of every representable set, tagged with the set's index.
pub fn all_cores(tab: &CommutatorTable, reps: &[RepresentableSet]) -> Result<Vec<(usize, Core)>> {
    let per: Vec<Result<Vec<Core>>> = reps.par_iter().map(|r| reduce(tab, r)).collect();
    let mut out = Vec::new();
    for (i, cs) in per.into_iter().enumerate() {
        for c in cs? {
            out.push((i, c));
        }
    }
    Ok(out)
}

/// Counts of nonabelian cores by form.
pub fn form_counts(tab: &CommutatorTable, cores: &[(usize, Core)]) -> BTreeMap<CoreForm, usize> {
    let mut m = BTreeMap::new();
    for (_, c) in cores {
        if !c.abelian {
            *m.entry(core_form(tab, c)).or_insert(0) += 1;
        }
    }
    m
}
