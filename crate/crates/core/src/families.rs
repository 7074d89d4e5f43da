//! Closed-form character counts of the nonabelian core families of `UF4(2^f)`.
//!
//! Each family lists rows `(label, count, degree)`; counts are PORC in `q`
//! and degrees are `q^i / 2^j`. The data is transcribed and is validated
//! against the numeric solver, never used to correct it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coresolver::Histogram;
use crate::poly::{Parity, Poly, PorcPolynomial};
use crate::reduction::CoreForm;

/// A character degree `q^i / 2^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Degree {
    pub i: u32,
    pub j: u32,
}

impl Degree {
    pub const ONE: Degree = Degree { i: 0, j: 0 };

    pub fn new(i: u32, j: u32) -> Self {
        Degree { i, j }
    }

    /// `log2` of the degree at `q = 2^f`.
    pub fn log2_at(self, f: u32) -> u32 {
        f * self.i - self.j
    }

    /// Multiplies by `q^k`.
    pub fn times_q(self, k: u32) -> Self {
        Degree { i: self.i + k, j: self.j }
    }

    /// `D²` as a polynomial in `q`.
    pub fn squared(self) -> Poly {
        Poly::q().pow(2 * self.i) * Poly::frac(1, 1i128 << (2 * self.j))
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (1, 0) => write!(f, "q"),
            (i, 0) => write!(f, "q^{i}"),
            (1, j) => write!(f, "q/{}", 1u64 << j),
            (i, j) => write!(f, "q^{i}/{}", 1u64 << j),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub label: String,
    pub count: PorcPolynomial,
    pub degree: Degree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub name: String,
    pub form: CoreForm,
    /// Number of cores of this family in `F4`.
    pub frequency: usize,
    pub rows: Vec<FamilyRow>,
}

impl Family {
    /// Rows valid for parity `p`, paired with their count polynomial.
    pub fn rows_for(&self, p: Parity) -> impl Iterator<Item = (&FamilyRow, &Poly)> {
        self.rows
            .iter()
            .map(move |r| (r, r.count.part(p)))
            .filter(|(_, c)| !c.is_zero())
    }

    /// `Σ count · degree²` for one parity part.
    pub fn sum_of_squares(&self, p: Parity) -> Poly {
        self.rows_for(p)
            .fold(Poly::zero(), |acc, (r, c)| acc + c * &r.degree.squared())
    }

    /// The right-hand side `q^{|S∖Z|}(q−1)^{|Z|}` of the per-core identity.
    pub fn expected_sum_of_squares(&self) -> Poly {
        Poly::q().pow((self.form.m - self.form.z) as u32) * Poly::v().pow(self.form.z as u32)
    }

    /// Counts at `q = 2^f`, keyed by `log2` of the degree.
    pub fn histogram_at(&self, f: u32) -> Histogram {
        let q = 1i128 << f;
        let mut h = BTreeMap::new();
        for (r, c) in self.rows_for(Parity::of_q(q as u32)) {
            let n = c.eval_int(q).expect("family counts are integral");
            if n != 0 {
                *h.entry(r.degree.log2_at(f)).or_insert(0) += n as u128;
            }
        }
        h
    }

    /// Whether the family splits by the parity of `f`.
    pub fn is_porc_split(&self) -> bool {
        self.rows.iter().any(|r| !r.count.is_uniform())
    }
}

/// `n/d · (q−1)^e · Π (q − r)` over `roots`.
fn term(n: i128, d: i128, e: u32, roots: &[i128]) -> Poly {
    roots
        .iter()
        .fold(Poly::frac(n, d) * Poly::v().pow(e), |acc, &r| acc * Poly::q_minus(r))
}

fn row(label: &str, count: Poly, i: u32, j: u32) -> FamilyRow {
    FamilyRow {
        label: label.to_string(),
        count: PorcPolynomial::uniform(count),
        degree: Degree::new(i, j),
    }
}

fn row_parity(label: &str, parity: Parity, count: Poly, i: u32, j: u32) -> FamilyRow {
    FamilyRow {
        label: label.to_string(),
        count: PorcPolynomial::only(parity, count),
        degree: Degree::new(i, j),
    }
}

fn family(name: &str, form: (usize, usize, usize), frequency: usize, rows: Vec<FamilyRow>) -> Family {
    Family {
        name: name.to_string(),
        form: CoreForm { z: form.0, m: form.1, c: form.2 },
        frequency,
        rows,
    }
}

/// The fourteen nonabelian core families of `UF4(2^f)`.
pub fn f4_families() -> Vec<Family> {
    use Parity::{Even, Odd};
    vec![
        family("F_1", (2, 4, 1), 185, vec![row("F_1", term(4, 1, 2, &[]), 1, 1)]),
        family(
            "F_2",
            (3, 10, 9),
            1,
            vec![
                row("F_2^1", term(1, 1, 3, &[]), 3, 0),
                row("F_2^2", term(4, 1, 4, &[]), 3, 1),
            ],
        ),
        family("F_3", (4, 8, 2), 2, vec![row("F_3", term(16, 1, 4, &[]), 2, 2)]),
        family("F_{4,1}", (4, 8, 4), 6, vec![row("F_{4,1}", term(4, 1, 4, &[]), 2, 1)]),
        family(
            "F_{4,2}",
            (4, 8, 4),
            2,
            vec![
                row_parity("F_{4,2}^{even,1}", Even, term(2, 3, 4, &[]), 2, 0),
                row_parity("F_{4,2}^{even,2}", Even, term(16, 3, 4, &[]), 2, 2),
                row_parity("F_{4,2}^{odd}", Odd, term(4, 1, 4, &[]), 2, 1),
            ],
        ),
        family("F_5", (4, 10, 5), 2, vec![row("F_5", term(16, 1, 4, &[]), 3, 2)]),
        family("F_6", (4, 11, 6), 2, vec![row("F_6", term(4, 1, 4, &[0]), 3, 1)]),
        family("F_{7,1}", (4, 12, 9), 1, vec![row("F_{7,1}", term(1, 1, 4, &[0, 0]), 3, 0)]),
        family("F_{7,2}", (4, 12, 9), 1, {
            let mut rows = vec![row("F_{7,2}^1", term(8, 1, 4, &[]), 4, 3)];
            for k in 2..=8 {
                rows.push(row(&format!("F_{{7,2}}^{k}"), term(2, 1, 4, &[]), 4, 2));
            }
            rows
        }),
        family(
            "F_8",
            (5, 9, 3),
            2,
            vec![
                row("F_8^1", term(8, 1, 4, &[2]), 2, 2),
                row("F_8^2", term(2, 1, 4, &[0]), 2, 1),
            ],
        ),
        family(
            "F_{9,1}",
            (5, 9, 4),
            3,
            vec![
                row_parity("F_{9,1}^{even,1}", Even, term(8, 3, 4, &[4]), 2, 2),
                row_parity("F_{9,1}^{even,2}", Even, term(2, 1, 4, &[0]), 2, 1),
                row_parity("F_{9,1}^{even,3}", Even, term(1, 3, 5, &[]), 2, 0),
                row_parity("F_{9,1}^{odd,1}", Odd, term(8, 3, 4, &[2]), 2, 2),
                row_parity("F_{9,1}^{odd,2}", Odd, term(2, 1, 4, &[2]), 2, 1),
                row_parity("F_{9,1}^{odd,3}", Odd, term(1, 3, 4, &[-1]), 2, 0),
            ],
        ),
        family(
            "F_{9,2}",
            (5, 9, 4),
            1,
            vec![
                row("F_{9,2}^1", term(1, 1, 4, &[]), 2, 0),
                row("F_{9,2}^2", term(4, 1, 4, &[2]), 2, 1),
            ],
        ),
        family(
            "F_10",
            (5, 11, 6),
            2,
            vec![
                row("F_10^1", term(8, 1, 4, &[2]), 3, 2),
                row("F_10^2", term(2, 1, 4, &[0]), 3, 1),
            ],
        ),
        family(
            "F_11",
            (6, 10, 4),
            1,
            vec![
                row("F_11^1", term(1, 1, 4, &[]), 2, 0),
                row("F_11^2", term(4, 1, 4, &[2]), 2, 1),
                row_parity("F_11^{even,3}", Even, term(2, 3, 5, &[]), 2, 0),
                row_parity("F_11^{even,4}", Even, term(16, 3, 4, &[4]), 2, 2),
                row_parity("F_11^{even,5}", Even, term(1, 3, 5, &[2]), 2, 0),
                row_parity("F_11^{even,6}", Even, term(2, 1, 4, &[0, 3]), 2, 1),
                row_parity("F_11^{even,7}", Even, term(8, 3, 4, &[4, 5]), 2, 2),
                row_parity("F_11^{odd,3}", Odd, term(4, 1, 4, &[2]), 2, 1),
                row_parity("F_11^{odd,4}", Odd, term(1, 3, 4, &[2, -1]), 2, 0),
                row_parity("F_11^{odd,5}", Odd, term(2, 1, 4, &[2, 3]), 2, 1),
                row_parity("F_11^{odd,6}", Odd, term(8, 3, 4, &[2, 5]), 2, 2),
            ],
        ),
    ]
}

/// The three nonabelian core families of `UB4(2^f)` and `UC4(2^f)`.
pub fn b4_families() -> Vec<Family> {
    let f4 = f4_families();
    let pick = |name: &str, freq: usize| {
        let mut fam = f4.iter().find(|f| f.name == name).cloned().expect("known family");
        fam.frequency = freq;
        fam
    };
    vec![pick("F_1", 51), pick("F_3", 1), pick("F_6", 1)]
}

/// Family of the given name, searched in the `F4` list.
pub fn family_by_name(name: &str) -> Option<Family> {
    f4_families().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_family_satisfies_the_square_identity() {
        for fam in f4_families() {
            for p in [Parity::Even, Parity::Odd] {
                assert_eq!(fam.sum_of_squares(p), fam.expected_sum_of_squares(), "{} {p:?}", fam.name);
            }
        }
    }

    #[test]
    fn counts_are_integral() {
        for fam in f4_families() {
            for f in 1..=8 {
                let q = 1i128 << f;
                for (r, c) in fam.rows_for(Parity::of_q(q as u32)) {
                    assert!(c.eval_int(q).is_some(), "{} at q={q}", r.label);
                }
            }
        }
    }

    #[test]
    fn frequencies_add_up() {
        assert_eq!(f4_families().iter().map(|f| f.frequency).sum::<usize>(), 211);
        assert_eq!(f4_families().len(), 14);
    }

    #[test]
    fn f42_at_four() {
        let h = family_by_name("F_{4,2}").unwrap().histogram_at(2);
        assert_eq!(h, BTreeMap::from([(2, 432), (4, 54)]));
    }
}
