//! Fixtures shared by the benchmarks in `benches/`.

use quattern::census::{assign_families, families_for, inventory, Assignment};
use quattern::{CommutatorTable, Family, Inventory, RootSystem, RootType};

/// Commutator table of `U` at `p = 2`.
pub fn table(ty: RootType, rank: usize) -> CommutatorTable {
    CommutatorTable::build(&RootSystem::build(ty, rank).expect("root system"), 2).expect("commutator table")
}

/// Inventory, candidate families and branching-class assignment of a type.
pub fn prepared(tab: &CommutatorTable) -> (Inventory, Vec<Family>, Vec<Assignment>) {
    let inv = inventory(tab).expect("inventory");
    let fams = families_for(tab.rs.type_tag, tab.rs.rank);
    let asg = assign_families(tab, &inv, &fams, &[1, 2, 3]).expect("assignment");
    (inv, fams, asg)
}
