//! Positive root systems of the simple types A–G.
//!
//! Roots are enumerated by height; inside a height level the order is the one
//! recorded in the embedded tables under `data/roots/`. Those tables were
//! produced by walking each level in order and appending `β + α_i` for
//! `i = 1..r`, which reproduces the enumeration used by GAP4 for F4.
//!
//! Indices are 0-based inside the crate. Anything printed for humans (labels,
//! JSON) uses the 1-based `α_k` convention.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rootset::RootSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "E" => Ok(RootType::E),
            "F" => Ok(RootType::F),
            "G" => Ok(RootType::G),
            other => Err(Error::InvalidType(format!("unknown root type {other:?}"))),
        }
    }
}

/// A positive root, written over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coeffs: Vec<i32>,
    pub height: u32,
    /// 0-based position in the fixed enumeration.
    pub index: usize,
}

impl Root {
    /// 1-based label as used in the literature, e.g. `α_18`.
    pub fn label(&self) -> String {
        format!("α_{}", self.index + 1)
    }
}

macro_rules! root_tables {
    ($($name:literal),* $(,)?) => {
        fn embedded_table(name: &str) -> Option<&'static str> {
            match name {
                $($name => Some(include_str!(concat!("../data/roots/", $name, ".txt"))),)*
                _ => None,
            }
        }
    };
}

root_tables!(
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C2",
    "C3", "C4", "C5", "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2",
);

/// Symmetric Gram matrix of the simple roots, scaled to integers.
///
/// B: α_r short. C: α_r long. F4: α_1, α_2 long. G2: α_1 long, α_2 short.
fn gram_matrix(ty: RootType, r: usize) -> Result<Vec<Vec<i32>>> {
    let bad = || Error::InvalidType(format!("{ty}{r} is not a supported simple type"));
    let mut g = vec![vec![0i32; r]; r];
    match ty {
        RootType::A => {
            if !(1..=8).contains(&r) {
                return Err(bad());
            }
            for i in 0..r {
                g[i][i] = 2;
            }
            for i in 0..r.saturating_sub(1) {
                g[i][i + 1] = -1;
                g[i + 1][i] = -1;
            }
        }
        RootType::B => {
            if !(2..=8).contains(&r) {
                return Err(bad());
            }
            for i in 0..r {
                g[i][i] = 4;
            }
            g[r - 1][r - 1] = 2;
            for i in 0..r - 1 {
                g[i][i + 1] = -2;
                g[i + 1][i] = -2;
            }
        }
        RootType::C => {
            if !(2..=8).contains(&r) {
                return Err(bad());
            }
            for i in 0..r {
                g[i][i] = 2;
            }
            g[r - 1][r - 1] = 4;
            for i in 0..r - 1 {
                let v = if i == r - 2 { -2 } else { -1 };
                g[i][i + 1] = v;
                g[i + 1][i] = v;
            }
        }
        RootType::D => {
            if !(4..=8).contains(&r) {
                return Err(bad());
            }
            for i in 0..r {
                g[i][i] = 2;
            }
            for i in 0..r - 2 {
                g[i][i + 1] = -1;
                g[i + 1][i] = -1;
            }
            g[r - 3][r - 1] = -1;
            g[r - 1][r - 3] = -1;
        }
        RootType::E => {
            if !(6..=8).contains(&r) {
                return Err(bad());
            }
            for i in 0..r {
                g[i][i] = 2;
            }
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (1, 3)];
            edges.extend((4..r - 1).map(|k| (k, k + 1)));
            for (a, b) in edges {
                g[a][b] = -1;
                g[b][a] = -1;
            }
        }
        RootType::F => {
            if r != 4 {
                return Err(bad());
            }
            g = vec![
                vec![4, -2, 0, 0],
                vec![-2, 4, -2, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
        }
        RootType::G => {
            if r != 2 {
                return Err(bad());
            }
            g = vec![vec![6, -3], vec![-3, 2]];
        }
    }
    Ok(g)
}

/// The expected number of positive roots.
pub fn classical_count(ty: RootType, r: usize) -> usize {
    match ty {
        RootType::A => r * (r + 1) / 2,
        RootType::B | RootType::C => r * r,
        RootType::D => r * (r - 1),
        RootType::E => match r {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        RootType::F => 24,
        RootType::G => 6,
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub type_tag: RootType,
    pub rank: usize,
    pub roots: Vec<Root>,
    gram: Vec<Vec<i32>>,
    sum_table: Vec<Option<usize>>,
    lookup: HashMap<Vec<i32>, usize>,
    table_text: &'static str,
}

impl RootSystem {
    pub fn build(ty: RootType, rank: usize) -> Result<Self> {
        let gram = gram_matrix(ty, rank)?;
        let name = format!("{ty}{rank}");
        let text = embedded_table(&name)
            .ok_or_else(|| Error::InvalidType(format!("no root table for {name}")))?;
        let mut roots = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let coeffs: Vec<i32> = line
                .split_whitespace()
                .map(|w| w.parse::<i32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Data(format!("{name} line {}: {e}", n + 1)))?;
            if coeffs.len() != rank || coeffs.iter().any(|&c| c < 0) || coeffs.iter().all(|&c| c == 0)
            {
                return Err(Error::Data(format!("{name} line {}: bad root {line:?}", n + 1)));
            }
            let height = coeffs.iter().sum::<i32>() as u32;
            roots.push(Root {
                coeffs,
                height,
                index: n,
            });
        }
        let lookup: HashMap<Vec<i32>, usize> =
            roots.iter().map(|r| (r.coeffs.clone(), r.index)).collect();
        let n = roots.len();
        let mut sum_table = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: Vec<i32> = roots[i]
                    .coeffs
                    .iter()
                    .zip(&roots[j].coeffs)
                    .map(|(a, b)| a + b)
                    .collect();
                sum_table[i * n + j] = lookup.get(&s).copied();
            }
        }
        let rs = RootSystem {
            type_tag: ty,
            rank,
            roots,
            gram,
            sum_table,
            lookup,
            table_text: text,
        };
        rs.validate()?;
        Ok(rs)
    }

    /// Checks the embedded table against closure of the simple roots.
    fn validate(&self) -> Result<()> {
        let name = format!("{}{}", self.type_tag, self.rank);
        let closure = closure_roots(&self.gram);
        if closure.len() != self.roots.len() || self.lookup.len() != self.roots.len() {
            return Err(Error::Data(format!(
                "{name}: table has {} roots, closure gives {}",
                self.roots.len(),
                closure.len()
            )));
        }
        for c in &closure {
            if !self.lookup.contains_key(c) {
                return Err(Error::Data(format!("{name}: root {c:?} missing from table")));
            }
        }
        for w in self.roots.windows(2) {
            if w[0].height > w[1].height {
                return Err(Error::Data(format!("{name}: table not sorted by height")));
            }
        }
        for i in 0..self.rank {
            if self.roots[i].coeffs.iter().enumerate().any(|(k, &c)| c != (k == i) as i32) {
                return Err(Error::Data(format!("{name}: simple roots must come first")));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.type_tag, self.rank)
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.roots.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.roots.len(),
            })
        }
    }

    /// Index of `α_i + α_j` when it is a positive root.
    pub fn root_sum(&self, i: usize, j: usize) -> Result<Option<usize>> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.sum_table[i * self.len() + j])
    }

    /// Unchecked variant of [`root_sum`](Self::root_sum) for hot loops.
    #[inline]
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sum_table[i * self.len() + j]
    }

    /// `α_i < α_j` in the root poset.
    pub fn is_less(&self, i: usize, j: usize) -> Result<bool> {
        self.check(i)?;
        self.check(j)?;
        let (a, b) = (&self.roots[i].coeffs, &self.roots[j].coeffs);
        Ok(i != j && a.iter().zip(b).all(|(x, y)| x <= y))
    }

    /// Index of the root with the given coefficient vector, if any.
    pub fn find(&self, coeffs: &[i32]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    /// Whether `±v` is a root (`v` may have mixed signs).
    pub fn is_root_or_negative(&self, v: &[i32]) -> bool {
        if v.iter().all(|&c| c >= 0) {
            self.lookup.contains_key(v)
        } else if v.iter().all(|&c| c <= 0) {
            let neg: Vec<i32> = v.iter().map(|c| -c).collect();
            self.lookup.contains_key(&neg)
        } else {
            false
        }
    }

    /// Symmetric bilinear form on coefficient vectors.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i32 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn all(&self) -> RootSet {
        RootSet::full(self.len())
    }

    pub fn highest(&self) -> usize {
        self.len() - 1
    }

    /// The embedded enumeration text (one root per line).
    pub fn table_text(&self) -> &'static str {
        self.table_text
    }

    /// SHA-256 of the root table, recorded in census provenance.
    pub fn table_checksum(&self) -> String {
        hex::encode(Sha256::digest(self.table_text.as_bytes()))
    }
}

/// Closure of the simple roots using root strings; returns the level-by-level
/// enumeration (which is also how the embedded tables were generated).
pub fn closure_roots(gram: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let r = gram.len();
    let ip = |a: &[i32], b: &[i32]| -> i32 {
        let mut s = 0;
        for i in 0..r {
            for j in 0..r {
                s += a[i] * gram[i][j] * b[j];
            }
        }
        s
    };
    let simple: Vec<Vec<i32>> = (0..r)
        .map(|i| (0..r).map(|k| (k == i) as i32).collect())
        .collect();
    let mut seen: std::collections::HashSet<Vec<i32>> = simple.iter().cloned().collect();
    let mut out = simple.clone();
    let mut level = simple.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for b in &level {
            for a in &simple {
                // length of the α-string below β
                let mut p = 0;
                loop {
                    let c: Vec<i32> = b.iter().zip(a).map(|(x, y)| x - (p + 1) * y).collect();
                    if seen.contains(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let cartan = 2 * ip(b, a) / ip(a, a);
                if p - cartan >= 1 {
                    let c: Vec<i32> = b.iter().zip(a).map(|(x, y)| x + y).collect();
                    if seen.insert(c.clone()) {
                        next.push(c.clone());
                        out.push(c);
                    }
                }
            }
        }
        level = next;
    }
    out
}

/// Level-by-level enumeration computed from scratch, for comparing against
/// the embedded tables.
pub fn generated_enumeration(ty: RootType, rank: usize) -> Result<Vec<Vec<i32>>> {
    Ok(closure_roots(&gram_matrix(ty, rank)?))
}

/// All `(type, rank)` pairs with an embedded table.
pub fn supported_types() -> Vec<(RootType, usize)> {
    let mut v = Vec::new();
    v.extend((1..=8).map(|r| (RootType::A, r)));
    v.extend((2..=8).map(|r| (RootType::B, r)));
    v.extend((2..=8).map(|r| (RootType::C, r)));
    v.extend((4..=8).map(|r| (RootType::D, r)));
    v.extend((6..=8).map(|r| (RootType::E, r)));
    v.push((RootType::F, 4));
    v.push((RootType::G, 2));
    v
}
