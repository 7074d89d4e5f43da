//! Character parametrization machinery for Sylow p-subgroups of finite
//! Chevalley groups: root systems, commutator relations, pattern and quattern
//! subgroups, the core reduction, and the character census of `UF4(2^f)`.

pub mod chevalley;
pub mod coregraph;
pub mod coresolver;
pub mod error;
pub mod families;
pub mod census;
pub mod gfq;
pub mod oracle;
pub mod patterns;
pub mod poly;
pub mod reduction;
pub mod reference;
pub mod rootset;
pub mod rootsys;

pub use chevalley::{Collector, CommutatorTable, Term, UElement};
pub use error::{Error, Result};
pub use gfq::{CubicCensus, Elem, FieldCtx};
pub use rootset::RootSet;
pub use rootsys::{Root, RootSystem, RootType};
pub use census::{DegreeCensus, Inventory};
pub use families::{Degree, Family};
pub use poly::{Parity, Poly, PorcPolynomial, Rat};
