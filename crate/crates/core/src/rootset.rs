//! Sets of positive roots as bitmasks over the fixed enumeration.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of `{0, .., N-1}` with `N ≤ 128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        RootSet(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    /// Builds a set from 1-based labels (`α_k` ↦ `k`).
    pub fn from_labels(labels: &[usize]) -> Self {
        RootSet::from_indices(labels.iter().map(|&k| k - 1))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        RootSet(self.0 | 1u128 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        RootSet(self.0 & !(1u128 << i))
    }

    #[inline]
    pub fn union(self, o: RootSet) -> Self {
        RootSet(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: RootSet) -> Self {
        RootSet(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: RootSet) -> Self {
        RootSet(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: RootSet) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros() as usize)
        }
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> RootSetIter {
        RootSetIter(self.0)
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

pub struct RootSetIter(u128);

impl Iterator for RootSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl IntoIterator for RootSet {
    type Item = usize;
    type IntoIter = RootSetIter;

    fn into_iter(self) -> RootSetIter {
        self.iter()
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        RootSet::from_indices(it)
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, k) in self.labels().into_iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&k| k == 0 || k > 128) {
            return Err(serde::de::Error::custom("root labels are 1-based and at most 128"));
        }
        Ok(RootSet::from_labels(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basics() {
        let s = RootSet::from_labels(&[2, 3, 5]);
        assert!(s.contains(1) && s.contains(4) && !s.contains(0));
        assert_eq!(s.len(), 3);
        assert_eq!(s.max(), Some(4));
        assert_eq!(s.min(), Some(1));
        assert_eq!(format!("{s:?}"), "{2,3,5}");
        assert_eq!(RootSet::full(24).len(), 24);
        assert_eq!(RootSet::full(128).len(), 128);
    }

    proptest! {
        #[test]
        fn json_round_trip(bits in any::<u128>()) {
            let s = RootSet(bits);
            let j = serde_json::to_string(&s).unwrap();
            let back: RootSet = serde_json::from_str(&j).unwrap();
            prop_assert_eq!(s, back);
        }
    }
}
