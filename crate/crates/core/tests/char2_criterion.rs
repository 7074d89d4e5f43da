//! The mod-2 commutator of two positive roots is nontrivial exactly when
//! their sum is a root and their difference is not, in types B, C and F.
//! Type G2 breaks this through its coefficients of absolute value 3.

use quattern::{CommutatorTable, RootSystem, RootType};

fn difference_is_root(rs: &RootSystem, i: usize, j: usize) -> bool {
    let d: Vec<i32> = rs.roots[i].coeffs.iter().zip(&rs.roots[j].coeffs).map(|(a, b)| a - b).collect();
    rs.is_root_or_negative(&d)
}

/// Pairs `(α, β)` with a nontrivial mod-2 commutator where the criterion fails.
fn exceptions(ty: RootType, rank: usize) -> Vec<(usize, usize)> {
    let rs = RootSystem::build(ty, rank).unwrap();
    let t = CommutatorTable::build(&rs, 2).unwrap();
    let mut out = Vec::new();
    for i in 0..t.len() {
        for j in 0..t.len() {
            if i == j {
                continue;
            }
            let nontrivial = !t.terms_mod_p(i, j).is_empty();
            let predicted = rs.sum(i, j).is_some() && !difference_is_root(&rs, i, j);
            if nontrivial != predicted {
                out.push((i, j));
            }
        }
    }
    out
}

#[test]
fn criterion_holds_in_rank_four() {
    for ty in [RootType::B, RootType::C, RootType::F] {
        assert_eq!(exceptions(ty, 4), vec![], "{ty}4");
    }
}

#[test]
fn criterion_holds_in_small_ranks() {
    for (ty, r) in [(RootType::B, 2), (RootType::B, 3), (RootType::C, 3)] {
        assert_eq!(exceptions(ty, r), vec![], "{ty}{r}");
    }
}

#[test]
fn g2_is_a_counterexample() {
    let rs = RootSystem::build(RootType::G, 2).unwrap();
    let t = CommutatorTable::build(&rs, 2).unwrap();
    let ex = exceptions(RootType::G, 2);
    assert!(!ex.is_empty());
    for (i, j) in ex {
        // Nontrivial mod 2 although α − β is a root: the surviving terms
        // carry coefficient ±3 or ±1 with a nonlinear exponent.
        assert!(!t.terms_mod_p(i, j).is_empty());
        assert!(difference_is_root(&rs, i, j));
    }
}
