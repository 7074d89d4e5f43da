//! The graph of a nonabelian core and its arm/leg partition `I ⊔ J`.
//!
//! Vertices are the roots of `S ∖ Z` (after splitting off the direct factor
//! `D ⊆ Z`); two vertices are joined when their commutator is nontrivial and
//! lies in `X_Z`. Valency-zero vertices form the heart.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::chevalley::CommutatorTable;
use crate::error::{Error, Result};
use crate::patterns::{center_of, support_mod};
use crate::reduction::Core;
use crate::rootset::RootSet;

/// Roots of the quattern a core graph is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreView {
    pub s: RootSet,
    pub z: RootSet,
    pub kill: RootSet,
}

impl CoreView {
    /// `S ∖ D`, `Z ∖ D`, and `N_Σ ∪ K ∪ D`.
    pub fn of(core: &Core) -> Self {
        CoreView {
            s: core.reduced_s(),
            z: core.reduced_z(),
            kill: core.kill().union(core.d),
        }
    }
}

/// A path hanging off a circle vertex; `path[0]` is the attachment vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachedTree {
    pub attach: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    /// A linear tree, listed from one end to the other.
    Tree { path: Vec<usize> },
    /// A union of circles (the 2-core of the component) with attached paths.
    Circles { circle: RootSet, trees: Vec<AttachedTree> },
}

impl Component {
    pub fn vertices(&self) -> RootSet {
        match self {
            Component::Tree { path } => path.iter().copied().collect(),
            Component::Circles { circle, trees } => {
                let mut v = *circle;
                for t in trees {
                    v = v.union(t.path.iter().copied().collect());
                }
                v
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreGraph {
    pub vertices: RootSet,
    pub edges: Vec<(usize, usize)>,
    pub heart: RootSet,
    pub components: Vec<Component>,
}

impl CoreGraph {
    pub fn neighbours(&self, v: usize) -> RootSet {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Edges as 1-based label pairs, smaller label first, sorted.
    pub fn edge_labels(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges.iter().map(|&(a, b)| (a.min(b) + 1, a.max(b) + 1)).collect();
        e.sort();
        e
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArmLeg {
    pub i: RootSet,
    pub j: RootSet,
}

/// Builds the core graph and classifies its components.
pub fn build_graph(tab: &CommutatorTable, view: &CoreView) -> Result<CoreGraph> {
    let vertices = view.s.difference(view.z);
    let mut edges = Vec::new();
    for a in vertices.iter() {
        for b in vertices.iter() {
            if a < b {
                let sup = support_mod(tab, a, b, view.kill);
                if !sup.is_empty() && sup.is_subset(view.z) {
                    edges.push((a, b));
                }
            }
        }
    }
    let mut g = CoreGraph {
        vertices,
        edges,
        heart: RootSet::EMPTY,
        components: Vec::new(),
    };
    let adj: BTreeMap<usize, RootSet> = vertices.iter().map(|v| (v, g.neighbours(v))).collect();
    g.heart = vertices.iter().filter(|v| adj[v].is_empty()).collect();
    let mut seen = g.heart;
    for start in vertices.iter() {
        if seen.contains(start) {
            continue;
        }
        let comp = flood(&adj, start);
        seen = seen.union(comp);
        g.components.push(classify(&adj, comp)?);
    }
    Ok(g)
}

fn flood(adj: &BTreeMap<usize, RootSet>, start: usize) -> RootSet {
    let mut comp = RootSet::singleton(start);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in adj[&v].iter() {
            if !comp.contains(w) {
                comp.insert(w);
                queue.push_back(w);
            }
        }
    }
    comp
}

fn classify(adj: &BTreeMap<usize, RootSet>, comp: RootSet) -> Result<Component> {
    // Strip leaves repeatedly; what remains is the union of circles.
    let mut core = comp;
    loop {
        let leaf = core.iter().find(|v| adj[v].intersection(core).len() <= 1);
        match leaf {
            Some(v) => core.remove(v),
            None => break,
        }
    }
    if core.is_empty() {
        if comp.iter().any(|v| adj[&v].len() > 2) {
            return Err(Error::Unsupported(format!("core graph component {comp:?} is a branching tree")));
        }
        let end = comp.iter().find(|v| adj[v].len() <= 1).expect("a tree has a leaf");
        return Ok(Component::Tree {
            path: walk(adj, end, None, comp),
        });
    }
    let mut trees = Vec::new();
    for c in core.iter() {
        for w in adj[&c].difference(core).iter() {
            let mut path = vec![c];
            path.extend(walk(adj, w, Some(c), comp));
            if path[1..].iter().any(|&v| adj[&v].len() > 2) {
                return Err(Error::Unsupported(format!(
                    "tree attached to circle vertex {} in {comp:?} is not linear",
                    c + 1
                )));
            }
            trees.push(AttachedTree { attach: c, path });
        }
    }
    Ok(Component::Circles { circle: core, trees })
}

/// Walks a path from `v`, never returning to `prev`.
fn walk(adj: &BTreeMap<usize, RootSet>, mut v: usize, mut prev: Option<usize>, within: RootSet) -> Vec<usize> {
    let mut out = vec![v];
    loop {
        let next = adj[&v]
            .intersection(within)
            .iter()
            .find(|&w| Some(w) != prev && !out.contains(&w));
        match next {
            Some(w) => {
                out.push(w);
                prev = Some(v);
                v = w;
            }
            None => return out,
        }
    }
}

/// Arm/leg assignment of one component: `true` means the vertex is in `J`.
fn default_colouring(g: &CoreGraph, comp: &Component) -> Result<BTreeMap<usize, bool>> {
    let mut col = BTreeMap::new();
    match comp {
        Component::Tree { path } => {
            let delta = *path.iter().max().expect("nonempty tree");
            let pos = path.iter().position(|&v| v == delta).unwrap();
            for (k, &v) in path.iter().enumerate() {
                col.insert(v, (k as isize - pos as isize) % 2 == 0);
            }
        }
        Component::Circles { circle, trees } => {
            // Start from the circle vertex of largest valency (ties: the
            // larger root); it goes to J.
            let top = circle
                .iter()
                .max_by_key(|&v| (g.neighbours(v).len(), v))
                .expect("nonempty circle");
            col.insert(top, true);
            let mut queue = VecDeque::from([top]);
            while let Some(v) = queue.pop_front() {
                let cv = col[&v];
                for w in g.neighbours(v).intersection(*circle).iter() {
                    match col.get(&w) {
                        None => {
                            col.insert(w, !cv);
                            queue.push_back(w);
                        }
                        Some(&cw) if cw == cv => {
                            return Err(Error::Unsupported(format!("odd circle through {} and {}", v + 1, w + 1)));
                        }
                        _ => {}
                    }
                }
            }
            for t in trees {
                let base = col[&t.attach];
                for (k, &v) in t.path.iter().enumerate().skip(1) {
                    col.insert(v, if k % 2 == 0 { base } else { !base });
                }
            }
        }
    }
    Ok(col)
}

/// The arm/leg partition: trees alternate by distance from their maximal
/// root (which lies in `J`), circles are 2-coloured with the circle vertex of
/// largest valency in `J`, attached trees continue the colouring.
///
/// When this assignment violates the hypotheses checked by
/// [`verify_cor52`], the components are flipped in turn and the first
/// assignment passing the check is returned.
pub fn arm_leg(tab: &CommutatorTable, g: &CoreGraph, view: &CoreView) -> Result<ArmLeg> {
    let cols: Vec<BTreeMap<usize, bool>> = g
        .components
        .iter()
        .map(|c| default_colouring(g, c))
        .collect::<Result<_>>()?;
    let n = cols.len();
    let mut first_err = None;
    for flips in 0u32..(1 << n) {
        let mut al = ArmLeg {
            i: RootSet::EMPTY,
            j: RootSet::EMPTY,
        };
        for (k, col) in cols.iter().enumerate() {
            let flip = flips & (1 << k) != 0;
            for (&v, &in_j) in col {
                if in_j != flip {
                    al.j.insert(v);
                } else {
                    al.i.insert(v);
                }
            }
        }
        match verify_cor52(tab, view, g, &al) {
            Ok(()) => return Ok(al),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    Err(Error::Consistency(format!(
        "no arm/leg assignment passes the bijection hypotheses: {}",
        first_err.map(|e| e.to_string()).unwrap_or_default()
    )))
}

/// Checks the hypotheses of the inflation/induction bijection for `I, J`:
/// `H = X_{S∖I}` is a quattern group, `Z` is central, `J` is central in `H`,
/// `J ∩ Z = ∅`, and `[X_α, X_β] ⊆ X_Z` for `α ∈ I`, `β ∈ J`. All violated
/// conditions are named in the error.
pub fn verify_cor52(tab: &CommutatorTable, view: &CoreView, g: &CoreGraph, al: &ArmLeg) -> Result<()> {
    let v = cor52_violations(tab, view, g, al);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Consistency(v.join("; ")))
    }
}

/// The list of violated bijection hypotheses (empty when all hold).
pub fn cor52_violations(tab: &CommutatorTable, view: &CoreView, g: &CoreGraph, al: &ArmLeg) -> Vec<&'static str> {
    let mut out = Vec::new();
    let h = view.s.difference(al.i);
    if al.i.union(al.j).union(g.heart) != g.vertices || !al.i.intersection(al.j).is_empty() {
        out.push("I and J do not partition the non-heart vertices");
    }
    if g.edges.iter().any(|&(a, b)| al.i.contains(a) && al.i.contains(b)) {
        out.push("two vertices of I are adjacent");
    }
    let closed = h
        .iter()
        .all(|a| h.iter().all(|b| a == b || support_mod(tab, a, b, view.kill).is_subset(h)));
    if !closed {
        out.push("(0) X_{S∖I} is not a quattern group");
    }
    if !view.z.is_subset(center_of(tab, view.s, view.kill)) {
        out.push("(i) Z is not central in X_S");
    }
    if !al.j.is_subset(center_of(tab, h, view.kill)) {
        out.push("(ii) J is not central in X_{S∖I}");
    }
    if !al.j.intersection(view.z).is_empty() || !al.i.intersection(view.z).is_empty() {
        out.push("(iii) I or J meets Z");
    }
    let inside = al
        .i
        .iter()
        .all(|a| al.j.iter().all(|b| support_mod(tab, a, b, view.kill).is_subset(view.z)));
    if !inside {
        out.push("(iv) [X_I, X_J] is not contained in X_Z");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{representable_sets, RepresentableSet};
    use crate::reduction::reduce;
    use crate::rootsys::{RootSystem, RootType};

    #[test]
    fn b2_core_is_a_single_edge() {
        let t = CommutatorTable::build(&RootSystem::build(RootType::B, 2).unwrap(), 2).unwrap();
        let rep = RepresentableSet {
            sigma: RootSet::from_labels(&[3, 4]),
            n_sigma: RootSet::EMPTY,
        };
        let core = &reduce(&t, &rep).unwrap()[0];
        let view = CoreView::of(core);
        let g = build_graph(&t, &view).unwrap();
        assert_eq!(g.edge_labels(), vec![(1, 2)]);
        assert!(g.heart.is_empty());
        let al = arm_leg(&t, &g, &view).unwrap();
        assert_eq!(al.j, RootSet::from_labels(&[2]));
        assert_eq!(al.i, RootSet::from_labels(&[1]));
    }

    #[test]
    fn every_b3_core_passes() {
        let t = CommutatorTable::build(&RootSystem::build(RootType::B, 3).unwrap(), 2).unwrap();
        for rep in representable_sets(&t) {
            for core in reduce(&t, &rep).unwrap() {
                if !core.abelian {
                    let view = CoreView::of(&core);
                    let g = build_graph(&t, &view).unwrap();
                    arm_leg(&t, &g, &view).unwrap();
                }
            }
        }
    }
}
