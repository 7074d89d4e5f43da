//! Degree census of `Irr(U)`: abelian-core counts plus nonabelian family
//! data, with induction and direct-factor bookkeeping.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::CommutatorTable;
use crate::coregraph::{arm_leg, build_graph, ArmLeg, CoreGraph, CoreView};
use crate::coresolver::{extract_equation, merge, CoreSolver, Histogram, StabilizerEquation};
use crate::error::{Error, Result};
use crate::families::{b4_families, f4_families, Degree, Family};
use crate::gfq::FieldCtx;
use crate::patterns::representable_sets;
use crate::poly::{Parity, Poly, PorcPolynomial};
use crate::reduction::{all_cores, core_form, Core, CoreForm};
use crate::rootsys::RootType;

/// Per-degree character counts of a group.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeCensus {
    pub entries: BTreeMap<Degree, PorcPolynomial>,
}

impl DegreeCensus {
    pub fn add(&mut self, d: Degree, count: &PorcPolynomial) {
        let e = self.entries.entry(d).or_default();
        e.add_assign(count);
        if e.is_zero() {
            self.entries.remove(&d);
        }
    }

    pub fn total(&self) -> PorcPolynomial {
        let mut t = PorcPolynomial::default();
        for c in self.entries.values() {
            t.add_assign(c);
        }
        t
    }

    /// `Σ count · degree²`.
    pub fn sum_of_squares(&self) -> PorcPolynomial {
        let mut t = PorcPolynomial::default();
        for (d, c) in &self.entries {
            t.add_assign(&c.scale(&d.squared()));
        }
        t
    }

    /// Numeric histogram at `q = 2^f`.
    pub fn at(&self, f: u32) -> Result<Histogram> {
        let q = 1i128 << f;
        let mut h = Histogram::new();
        for (d, c) in &self.entries {
            let n = c
                .part(Parity::of_q(q as u32))
                .eval_int(q)
                .ok_or_else(|| Error::Consistency(format!("count at {d} is not integral at q = {q}")))?;
            if n < 0 {
                return Err(Error::Consistency(format!("negative count at {d} for q = {q}")));
            }
            if n > 0 {
                *h.entry(d.log2_at(f)).or_insert(0) += n as u128;
            }
        }
        Ok(h)
    }

    /// Whether every entry has equal even and odd parts.
    pub fn is_parity_independent(&self) -> bool {
        self.entries.values().all(PorcPolynomial::is_uniform)
    }
}

/// Count and degree of the characters of an abelian core:
/// `q^{|S∖Z|}(q−1)^{|Z|}` characters of degree `q^{|A|}`.
pub fn abelian_core_count(core: &Core) -> (PorcPolynomial, Degree) {
    let free = core.s.len() - core.z.len();
    let count = Poly::q().pow(free as u32) * Poly::v().pow(core.z.len() as u32);
    (PorcPolynomial::uniform(count), Degree::new(core.a.len() as u32, 0))
}

/// Analysis of one nonabelian core.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NonabelianCore {
    pub form: CoreForm,
    pub view: CoreView,
    pub graph: CoreGraph,
    /// `None` when the core has a heart.
    pub arm_leg: Option<ArmLeg>,
    pub equation: Option<StabilizerEquation>,
    pub class: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoreRecord {
    /// Index of the representable set.
    pub rep: usize,
    pub core: Core,
    pub nonabelian: Option<NonabelianCore>,
}

/// Nonabelian cores sharing one canonical equation signature.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BranchingClass {
    pub id: usize,
    pub form: CoreForm,
    pub signature: String,
    pub heart: bool,
    /// Indices into [`Inventory::records`].
    pub members: Vec<usize>,
}

/// All cores of a group, grouped into branching classes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Inventory {
    pub ty: RootType,
    pub rank: usize,
    pub rep_count: usize,
    pub records: Vec<CoreRecord>,
    pub classes: Vec<BranchingClass>,
}

impl Inventory {
    pub fn forms(&self) -> BTreeMap<CoreForm, usize> {
        let mut m = BTreeMap::new();
        for r in &self.records {
            if let Some(n) = &r.nonabelian {
                *m.entry(n.form).or_insert(0) += 1;
            }
        }
        m
    }

    pub fn nonabelian(&self) -> impl Iterator<Item = (&CoreRecord, &NonabelianCore)> {
        self.records.iter().filter_map(|r| r.nonabelian.as_ref().map(|n| (r, n)))
    }
}

/// Reduces every representable set and analyses the nonabelian cores.
pub fn inventory(tab: &CommutatorTable) -> Result<Inventory> {
    let reps = representable_sets(tab);
    let cores = all_cores(tab, &reps)?;
    let mut records = Vec::with_capacity(cores.len());
    let mut classes: Vec<BranchingClass> = Vec::new();
    let mut by_sig: BTreeMap<String, usize> = BTreeMap::new();
    for (rep, core) in cores {
        let idx = records.len();
        let nonabelian = if core.abelian {
            None
        } else {
            let form = core_form(tab, &core);
            let view = CoreView::of(&core);
            let graph = build_graph(tab, &view)?;
            let (al, eq, signature) = if graph.heart.is_empty() {
                let al = arm_leg(tab, &graph, &view)?;
                let eq = extract_equation(tab, &view, &al)?;
                let sig = eq.signature.clone();
                (Some(al), Some(eq), sig)
            } else {
                (None, None, format!("heart {form} {:?}", graph.edge_labels()))
            };
            let class = *by_sig.entry(signature.clone()).or_insert_with(|| {
                classes.push(BranchingClass {
                    id: classes.len(),
                    form,
                    signature,
                    heart: al.is_none(),
                    members: Vec::new(),
                });
                classes.len() - 1
            });
            classes[class].members.push(idx);
            Some(NonabelianCore {
                form,
                view,
                graph,
                arm_leg: al,
                equation: eq,
                class,
            })
        };
        records.push(CoreRecord { rep, core, nonabelian });
    }
    Ok(Inventory {
        ty: tab.rs.type_tag,
        rank: tab.rs.rank,
        rep_count: reps.len(),
        records,
        classes,
    })
}

/// Histogram of `Irr(X_S)_Z` for a heartless core at `q = 2^f`, with the
/// direct-factor roots excluded.
pub fn core_histogram(tab: &CommutatorTable, ctx: &FieldCtx, n: &NonabelianCore) -> Result<Histogram> {
    let eq = n
        .equation
        .as_ref()
        .ok_or_else(|| Error::Unsupported(format!("core {} has a heart; no numeric solver", n.form)))?;
    CoreSolver::new(tab, ctx, n.view, eq)?.histogram()
}

/// Closed-form families available for a root system at `p = 2`.
pub fn families_for(ty: RootType, rank: usize) -> Vec<Family> {
    match (ty, rank) {
        (RootType::F, 4) => f4_families(),
        (RootType::B | RootType::C, 4) => b4_families(),
        // Smaller groups: the families serve as candidates for matching.
        _ => f4_families(),
    }
}

/// The family assigned to a branching class, with the evidence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Assignment {
    pub class: usize,
    pub family: Option<String>,
    /// Numeric histograms of the representative core, by `f`.
    pub numeric: BTreeMap<u32, Histogram>,
    /// Whether the family's form equals the class form.
    pub form_matches: bool,
}

/// Matches every branching class against the closed-form families by
/// comparing the numeric histogram of a representative core with the
/// formulas at `q = 2^f` for each `f` in `fs`. Classes with a heart are
/// matched by form only.
pub fn assign_families(tab: &CommutatorTable, inv: &Inventory, families: &[Family], fs: &[u32]) -> Result<Vec<Assignment>> {
    let ctxs: Vec<FieldCtx> = fs.iter().map(|&f| FieldCtx::new(f)).collect::<Result<_>>()?;
    inv.classes
        .par_iter()
        .map(|class| {
            let rep = inv.records[class.members[0]].nonabelian.as_ref().expect("nonabelian member");
            if class.heart {
                let fam = families.iter().find(|f| f.form == class.form);
                return Ok(Assignment {
                    class: class.id,
                    family: fam.map(|f| f.name.clone()),
                    numeric: BTreeMap::new(),
                    form_matches: fam.is_some(),
                });
            }
            let mut numeric = BTreeMap::new();
            for (ctx, &f) in ctxs.iter().zip(fs) {
                numeric.insert(f, core_histogram(tab, ctx, rep)?);
            }
            let matching: Vec<&Family> = families
                .iter()
                .filter(|fam| fs.iter().all(|&f| fam.histogram_at(f) == numeric[&f]))
                .collect();
            let fam = matching
                .iter()
                .find(|f| f.form == class.form)
                .or_else(|| matching.first())
                .copied();
            Ok(Assignment {
                class: class.id,
                family: fam.map(|f| f.name.clone()),
                numeric,
                form_matches: fam.is_some_and(|f| f.form == class.form),
            })
        })
        .collect()
}

/// Symbolic census from the abelian cores and the assigned families.
pub fn assemble_symbolic(inv: &Inventory, families: &[Family], assignments: &[Assignment]) -> Result<DegreeCensus> {
    let mut census = DegreeCensus::default();
    for rec in &inv.records {
        match &rec.nonabelian {
            None => {
                let (count, d) = abelian_core_count(&rec.core);
                census.add(d, &count);
            }
            Some(n) => {
                let name = assignments[n.class].family.as_ref().ok_or_else(|| {
                    Error::Unsupported(format!("branching class {} ({}) has no closed form", n.class, n.form))
                })?;
                let fam = families.iter().find(|f| &f.name == name).expect("assigned family exists");
                let mult = Poly::v().pow(rec.core.d.len() as u32);
                let shift = rec.core.a.len() as u32;
                for r in &fam.rows {
                    census.add(r.degree.times_q(shift), &r.count.scale(&mult));
                }
            }
        }
    }
    Ok(census)
}

/// Numeric census at `q = 2^f`. Heartless cores are solved directly;
/// cores with a heart use their closed form.
pub fn assemble_numeric(
    tab: &CommutatorTable,
    inv: &Inventory,
    families: &[Family],
    assignments: &[Assignment],
    f: u32,
) -> Result<Histogram> {
    let ctx = FieldCtx::new(f)?;
    let q = 1u128 << f;
    let parts: Vec<Result<Histogram>> = inv
        .records
        .par_iter()
        .map(|rec| {
            let mut h = Histogram::new();
            match &rec.nonabelian {
                None => {
                    let free = (rec.core.s.len() - rec.core.z.len()) as u32;
                    h.insert(f * rec.core.a.len() as u32, q.pow(free) * (q - 1).pow(rec.core.z.len() as u32));
                }
                Some(n) => {
                    let base = if n.equation.is_some() {
                        core_histogram(tab, &ctx, n)?
                    } else {
                        let name = assignments[n.class]
                            .family
                            .as_ref()
                            .ok_or_else(|| Error::Unsupported(format!("core {} with a heart has no closed form", n.form)))?;
                        families.iter().find(|fam| &fam.name == name).expect("assigned family exists").histogram_at(f)
                    };
                    let mult = (q - 1).pow(rec.core.d.len() as u32);
                    let shift = f * rec.core.a.len() as u32;
                    for (d, c) in base {
                        h.insert(d + shift, c * mult);
                    }
                }
            }
            Ok(h)
        })
        .collect();
    let mut total = Histogram::new();
    for p in parts {
        merge(&mut total, &p?);
    }
    Ok(total)
}

/// Outcome of the degree check for `q⁴/8` in the `F4` census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MalleReport {
    pub degree: Degree,
    pub present: bool,
    pub count: PorcPolynomial,
    /// Family rows supplying the degree (after the `q^{|A|}` shift).
    pub sources: Vec<String>,
}

/// Checks that the census has characters of degree `q⁴/8`, the 2-part of
/// the degree of the Steinberg-type character for `F4(2^f)`.
pub fn malle_check(inv: &Inventory, families: &[Family], assignments: &[Assignment], census: &DegreeCensus) -> MalleReport {
    let degree = Degree::new(4, 3);
    let count = census.entries.get(&degree).cloned().unwrap_or_default();
    let mut sources = Vec::new();
    for (rec, n) in inv.nonabelian() {
        let Some(name) = &assignments[n.class].family else { continue };
        let Some(fam) = families.iter().find(|f| &f.name == name) else { continue };
        for r in &fam.rows {
            if r.degree.times_q(rec.core.a.len() as u32) == degree && !sources.contains(&r.label) {
                sources.push(r.label.clone());
            }
        }
    }
    MalleReport {
        degree,
        present: !count.is_zero(),
        count,
        sources,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    #[test]
    fn abelian_count_shape() {
        let t = CommutatorTable::build(&RootSystem::build(RootType::B, 2).unwrap(), 2).unwrap();
        let inv = inventory(&t).unwrap();
        // N = Φ⁺ leaves the trivial group and its single character.
        let triv: Vec<_> = inv.records.iter().filter(|r| r.core.s.is_empty()).collect();
        assert_eq!(triv.len(), 1);
        let (c, d) = abelian_core_count(&triv[0].core);
        assert_eq!(c, PorcPolynomial::uniform(Poly::int(1)));
        assert_eq!(d, Degree::ONE);
    }

    #[test]
    fn b2_census_sums_to_group_order() {
        let t = CommutatorTable::build(&RootSystem::build(RootType::B, 2).unwrap(), 2).unwrap();
        let inv = inventory(&t).unwrap();
        let fams = vec![crate::families::family_by_name("F_1").unwrap()];
        let asg = assign_families(&t, &inv, &fams, &[1, 2, 3]).unwrap();
        assert!(asg.iter().all(|a| a.family.as_deref() == Some("F_1")));
        let c = assemble_symbolic(&inv, &fams, &asg).unwrap();
        assert_eq!(c.sum_of_squares(), PorcPolynomial::uniform(Poly::q().pow(4)));
    }
}
