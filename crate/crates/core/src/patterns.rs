//! Pattern groups, normal pattern subgroups, quattern groups and
//! representable sets, all decided from char-`p` commutator supports.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::chevalley::CommutatorTable;
use crate::error::{Error, Result};
use crate::rootset::RootSet;

/// The quotient `X_P / X_K` of a pattern group by a normal pattern subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quattern {
    pub p: RootSet,
    pub k: RootSet,
    pub s: RootSet,
}

impl Quattern {
    /// Validates that `X_P` is a pattern group and `X_K ⊴ X_P`.
    pub fn new(tab: &CommutatorTable, p: RootSet, k: RootSet) -> Result<Self> {
        if !is_pattern_group(tab, p) {
            return Err(Error::Precondition(format!("{p:?} is not a pattern group")));
        }
        if !is_normal_pattern(tab, p, k)? {
            return Err(Error::Precondition(format!("{k:?} is not normal in {p:?}")));
        }
        Ok(Quattern::unchecked(p, k))
    }

    pub fn unchecked(p: RootSet, k: RootSet) -> Self {
        Quattern {
            p,
            k,
            s: p.difference(k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepresentableSet {
    pub sigma: RootSet,
    pub n_sigma: RootSet,
}

/// Support of `[x_i, x_j]` inside the quotient by `X_K`.
#[inline]
pub fn support_mod(tab: &CommutatorTable, i: usize, j: usize, k: RootSet) -> RootSet {
    tab.support(i, j).difference(k)
}

/// Whether the product set `X_P` is a subgroup.
pub fn is_pattern_group(tab: &CommutatorTable, p: RootSet) -> bool {
    p.iter()
        .all(|i| p.iter().all(|j| i == j || tab.support(i, j).is_subset(p)))
}

/// Whether `X_N ⊴ X_P`; `X_P` must be a pattern group containing `N`.
pub fn is_normal_pattern(tab: &CommutatorTable, p: RootSet, n: RootSet) -> Result<bool> {
    if !n.is_subset(p) {
        return Err(Error::Precondition(format!("{n:?} is not contained in {p:?}")));
    }
    if !is_pattern_group(tab, p) {
        return Err(Error::Precondition(format!("{p:?} is not a pattern group")));
    }
    Ok(n
        .iter()
        .all(|j| p.iter().all(|i| i == j || tab.support(i, j).is_subset(n))))
}

/// `Z(X_S)`: roots whose subgroup is central in the quattern.
pub fn center_roots(tab: &CommutatorTable, quat: &Quattern) -> RootSet {
    center_of(tab, quat.s, quat.k)
}

/// Central roots of `X_S` computed modulo `X_K`.
pub fn center_of(tab: &CommutatorTable, s: RootSet, k: RootSet) -> RootSet {
    s.iter()
        .filter(|&g| s.iter().all(|d| d == g || support_mod(tab, g, d, k).is_empty()))
        .collect()
}

/// `D(X_S)`: roots `γ` with `X_S = X_γ × X_{S∖{γ}}`.
pub fn direct_factor_roots(tab: &CommutatorTable, quat: &Quattern) -> RootSet {
    direct_factors_of(tab, quat.s, quat.k)
}

pub fn direct_factors_of(tab: &CommutatorTable, s: RootSet, k: RootSet) -> RootSet {
    let hit = commutator_image(tab, s, k);
    center_of(tab, s, k).difference(hit)
}

/// Union of all commutator supports of pairs from `S` (mod `K`).
pub fn commutator_image(tab: &CommutatorTable, s: RootSet, k: RootSet) -> RootSet {
    let mut hit = RootSet::EMPTY;
    for i in s.iter() {
        for j in s.iter() {
            if i < j {
                hit = hit.union(support_mod(tab, i, j, k));
            }
        }
    }
    hit
}

/// Smallest normal pattern of `U` containing `root`.
pub fn principal_closure(tab: &CommutatorTable, root: usize) -> RootSet {
    let all = tab.rs.all();
    let mut set = RootSet::singleton(root);
    let mut queue = VecDeque::from([root]);
    while let Some(d) = queue.pop_front() {
        for a in all.iter() {
            if a == d {
                continue;
            }
            for k in tab.support(a, d).iter() {
                if !set.contains(k) {
                    set.insert(k);
                    queue.push_back(k);
                }
            }
        }
    }
    set
}

/// All `N` with `X_N ⊴ U`, sorted by (size, bits).
///
/// Normal patterns are closed under union and each is the union of the
/// principal closures of its elements, so a breadth-first search over unions
/// of principal closures reaches all of them.
pub fn enumerate_normal_patterns(tab: &CommutatorTable) -> Vec<RootSet> {
    let n = tab.len();
    let closures: Vec<RootSet> = (0..n).map(|r| principal_closure(tab, r)).collect();
    let mut seen: HashSet<RootSet> = HashSet::from([RootSet::EMPTY]);
    let mut queue = VecDeque::from([RootSet::EMPTY]);
    while let Some(cur) = queue.pop_front() {
        for r in 0..n {
            if cur.contains(r) {
                continue;
            }
            let next = cur.union(closures[r]);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<RootSet> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.0));
    out
}

/// One representable set per normal pattern, in the same order.
pub fn representable_sets(tab: &CommutatorTable) -> Vec<RepresentableSet> {
    let all = tab.rs.all();
    enumerate_normal_patterns(tab)
        .into_iter()
        .map(|n| RepresentableSet {
            sigma: center_of(tab, all.difference(n), n),
            n_sigma: n,
        })
        .collect()
}

/// Number of up-sets (equivalently antichains) of the root poset.
pub fn count_root_poset_upsets(tab: &CommutatorTable) -> usize {
    let rs = &tab.rs;
    let n = rs.len();
    let above: Vec<RootSet> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| rs.is_less(i, j).unwrap_or(false))
                .collect()
        })
        .collect();
    // Up-sets of a poset listed in a linear extension: decide roots from the
    // top down, memoizing on the set of already-excluded roots' down-closure.
    fn go(i: usize, chosen: RootSet, above: &[RootSet], memo: &mut std::collections::HashMap<(usize, u128), usize>) -> usize {
        if i == 0 {
            return 1;
        }
        let r = i - 1;
        let key = (i, chosen.0);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = go(r, chosen, above, memo);
        if above[r].is_subset(chosen) {
            total += go(r, chosen.with(r), above, memo);
        }
        memo.insert(key, total);
        total
    }
    let mut memo = std::collections::HashMap::new();
    go(n, RootSet::EMPTY, &above, &mut memo)
}
