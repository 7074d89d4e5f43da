//! Published reference values for rank-4 groups, used by the report and the
//! acceptance checks.

use crate::families::Degree;
use crate::poly::{Poly, Rat};
use crate::rootsys::RootType;

/// Number of representable sets of `U` for a rank-4 type at `p = 2`
/// (`small = true`) or at `p ≥ 3`.
pub fn representable_set_count(ty: RootType, small: bool) -> Option<usize> {
    Some(match (ty, small) {
        (RootType::A, _) => 42,
        (RootType::B | RootType::C, true) => 98,
        (RootType::B | RootType::C, false) => 70,
        (RootType::D, _) => 50,
        (RootType::F, true) => 190,
        (RootType::F, false) => 105,
        _ => return None,
    })
}

/// Nonabelian core forms of `UF4(2^f)` with their frequencies.
pub const F4_FORMS: [((usize, usize, usize), usize); 11] = [
    ((2, 4, 1), 185),
    ((3, 10, 9), 1),
    ((4, 8, 2), 2),
    ((4, 8, 4), 8),
    ((4, 10, 5), 2),
    ((4, 11, 6), 2),
    ((4, 12, 9), 2),
    ((5, 9, 3), 2),
    ((5, 9, 4), 4),
    ((5, 11, 6), 2),
    ((6, 10, 4), 1),
];

/// Nonabelian core forms of `UB4(2^f)` with their frequencies.
pub const B4_FORMS: [((usize, usize, usize), usize); 3] = [((2, 4, 1), 51), ((4, 8, 2), 1), ((4, 11, 6), 1)];

pub const F4_BRANCHING_CLASSES: usize = 14;

fn v_poly(coeffs: &[(i128, i128)]) -> Poly {
    let c: Vec<Rat> = coeffs.iter().map(|&(n, d)| Rat::new(n, d)).collect();
    Poly::from_v(&c)
}

/// Degree census of `UF4(2^f)`, as polynomials in `v = q − 1`
/// (coefficients listed from `v⁰` up).
pub fn f4_degree_census() -> Vec<(Degree, Poly)> {
    let d = Degree::new;
    let i = |n: i128| (n, 1);
    let z = (0, 1);
    vec![
        (d(0, 0), v_poly(&[i(1), i(4), i(6), i(4), i(1)])),
        (d(1, 1), v_poly(&[z, z, i(4), i(8), i(4)])),
        (d(1, 0), v_poly(&[z, i(4), i(12), i(14), i(8), i(2)])),
        (d(2, 1), v_poly(&[z, z, i(8), i(16), i(8)])),
        (d(2, 0), v_poly(&[z, i(4), i(17), i(30), i(27), i(12), i(2)])),
        (d(3, 1), v_poly(&[z, z, i(12), i(24), i(12)])),
        (d(3, 0), v_poly(&[z, i(4), i(20), i(36), i(28), i(8)])),
        (d(4, 3), v_poly(&[z, z, z, z, i(8)])),
        (d(4, 2), v_poly(&[z, z, z, z, (98, 3), (80, 3), (8, 3)])),
        (d(4, 1), v_poly(&[z, z, i(8), i(80), i(114), i(60), i(10)])),
        (
            d(4, 0),
            v_poly(&[z, i(2), i(23), i(68), (301, 3), (280, 3), (160, 3), i(16), i(2)]),
        ),
        (d(5, 1), v_poly(&[z, z, i(8), i(24), i(24), i(8)])),
        (d(5, 0), v_poly(&[z, i(2), i(12), i(34), i(50), i(38), i(14), i(2)])),
        (d(6, 1), v_poly(&[z, z, i(8), i(32), i(40), i(16)])),
        (d(6, 0), v_poly(&[z, i(2), i(13), i(36), i(53), i(40), i(15), i(2)])),
        (d(7, 1), v_poly(&[z, z, i(12), i(40), i(48), i(24), i(4)])),
        (d(7, 0), v_poly(&[z, i(2), i(10), i(20), i(20), i(10), i(2)])),
        (d(8, 1), v_poly(&[z, z, i(8), i(32), i(32), i(8)])),
        (d(8, 0), v_poly(&[z, z, i(7), i(18), i(18), i(8), i(1)])),
        (d(9, 1), v_poly(&[z, z, i(4), i(24), i(28), i(8)])),
        (d(9, 0), v_poly(&[z, z, i(2), i(4), i(2)])),
        (d(10, 2), v_poly(&[z, z, z, z, i(16)])),
        (d(10, 1), v_poly(&[z, z, z, i(8)])),
    ]
}

/// Total number of irreducible characters of `UF4(2^f)` in `v = q − 1`.
pub fn f4_total_in_v() -> Poly {
    v_poly(&[(1, 1), (24, 1), (194, 1), (552, 1), (674, 1), (362, 1), (104, 1), (20, 1), (2, 1)])
}

/// The same total as a polynomial in `q`.
pub fn f4_total_in_q() -> Poly {
    let c = [17, -94, 158, -16, -136, 46, 20, 4, 2];
    Poly(c.iter().map(|&n| Rat::from_integer(n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn totals_agree() {
        assert_eq!(f4_total_in_v(), f4_total_in_q());
        let rows = f4_degree_census().into_iter().fold(Poly::zero(), |a, (_, p)| a + p);
        assert_eq!(rows, f4_total_in_v());
        assert_eq!(f4_total_in_q().eval_int(2), Some(1933));
    }

    #[test]
    fn rows_square_to_the_group_order() {
        let s = f4_degree_census()
            .into_iter()
            .fold(Poly::zero(), |a, (d, p)| a + &p * &d.squared());
        assert_eq!(s, Poly::q().pow(24));
    }

    #[test]
    fn form_frequencies() {
        assert_eq!(F4_FORMS.iter().map(|f| f.1).sum::<usize>(), 211);
        assert_eq!(B4_FORMS.iter().map(|f| f.1).sum::<usize>(), 53);
    }
}
