//! Arithmetic progressions, 4-sets and support multisets.

use std::collections::BTreeMap;
use std::fmt;

use crate::array::{Block, PartialArray};
use crate::error::{Error, Result};

/// The progression `[lo, hi]_step = {lo, lo+step, ..., hi}`; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalD {
    lo: i64,
    hi: i64,
    step: i64,
}

impl IntervalD {
    pub fn new(lo: i64, hi: i64, step: i64) -> Result<Self> {
        if step <= 0 || (lo <= hi && (hi - lo) % step != 0) {
            return Err(Error::MalformedInterval { lo, hi, step });
        }
        Ok(Self { lo, hi, step })
    }

    /// `[lo, hi]` with step 1.
    pub fn range(lo: i64, hi: i64) -> Self {
        Self { lo, hi, step: 1 }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            ((self.hi - self.lo) / self.step + 1) as usize
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        !self.is_empty() && v >= self.lo && v <= self.hi && (v - self.lo) % self.step == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        let (lo, hi, step) = (self.lo, self.hi, self.step);
        (0..self.len() as i64).map(move |i| lo + i * step).take_while(move |&v| v <= hi)
    }
}

impl fmt::Display for IntervalD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.step == 1 {
            write!(f, "[{},{}]", self.lo, self.hi)
        } else {
            write!(f, "[{},{}]_{}", self.lo, self.hi, self.step)
        }
    }
}

/// The set `{x, x+d, x+2d, x+3d}` with `d` in `{1, 2, 4}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourSet {
    start: i64,
    kind: u8,
}

impl FourSet {
    pub fn new(start: i64, kind: u8) -> Result<Self> {
        if !matches!(kind, 1 | 2 | 4) {
            return Err(Error::domain("four-set type", format!("type {kind} is not 1, 2 or 4")));
        }
        Ok(Self { start, kind })
    }

    /// Smallest element.
    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn kind(&self) -> u8 {
        self.kind
    }

    pub fn elements(&self) -> [i64; 4] {
        let d = self.kind as i64;
        [self.start, self.start + d, self.start + 2 * d, self.start + 3 * d]
    }
}

/// A multiset of positive integers (absolute values of entries).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SupportSet {
    counts: BTreeMap<i64, usize>,
}

impl SupportSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: i64) {
        *self.counts.entry(v).or_insert(0) += 1;
    }

    pub fn extend<I: IntoIterator<Item = i64>>(&mut self, vs: I) {
        for v in vs {
            self.insert(v);
        }
    }

    pub fn add_interval(&mut self, iv: IntervalD) {
        self.extend(iv.iter());
    }

    /// Multiset union.
    pub fn union(&self, other: &SupportSet) -> SupportSet {
        let mut out = self.clone();
        for (&v, &c) in &other.counts {
            *out.counts.entry(v).or_insert(0) += c;
        }
        out
    }

    /// Removes one copy of each value in `vs`; fails if a value is missing.
    pub fn remove_all<I: IntoIterator<Item = i64>>(&mut self, vs: I) -> Result<()> {
        for v in vs {
            match self.counts.get_mut(&v) {
                Some(c) if *c > 1 => *c -= 1,
                Some(_) => {
                    self.counts.remove(&v);
                }
                None => return Err(Error::Partition(format!("value {v} is not available"))),
            }
        }
        Ok(())
    }

    pub fn contains(&self, v: i64) -> bool {
        self.counts.contains_key(&v)
    }

    pub fn count(&self, v: i64) -> usize {
        self.counts.get(&v).copied().unwrap_or(0)
    }

    /// Total number of values, counting multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn distinct_len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.counts.keys().next().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }

    /// `true` when every value occurs once.
    pub fn is_set(&self) -> bool {
        self.counts.values().all(|&c| c == 1)
    }

    /// Values occurring more than once, with their multiplicities.
    pub fn duplicates(&self) -> Vec<(i64, usize)> {
        self.counts
            .iter()
            .filter(|(_, &c)| c > 1)
            .map(|(&v, &c)| (v, c))
            .collect()
    }

    /// Distinct values in increasing order.
    pub fn values(&self) -> Vec<i64> {
        self.counts.keys().copied().collect()
    }

    pub fn iter_counts(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    /// `true` when this is exactly the set `{1, ..., n}`.
    pub fn is_exactly_one_to(&self, n: i64) -> bool {
        self.is_set() && self.distinct_len() as i64 == n.max(0) && (n <= 0 || (self.min() == Some(1) && self.max() == Some(n)))
    }
}

impl FromIterator<i64> for SupportSet {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut s = SupportSet::new();
        s.extend(iter);
        s
    }
}

/// Expands `[a, b]_d`.
pub fn interval_set(a: i64, b: i64, d: i64) -> Result<SupportSet> {
    let iv = IntervalD::new(a, b, d)?;
    Ok(iv.iter().collect())
}

/// Anything whose filled entries contribute to a support.
pub trait HasSupport {
    fn abs_values(&self) -> Vec<i64>;
}

impl HasSupport for Block {
    fn abs_values(&self) -> Vec<i64> {
        self.entries().iter().map(|v| v.abs()).collect()
    }
}

impl HasSupport for PartialArray {
    fn abs_values(&self) -> Vec<i64> {
        self.values().map(i64::abs).collect()
    }
}

impl HasSupport for FourSet {
    fn abs_values(&self) -> Vec<i64> {
        self.elements().to_vec()
    }
}

/// Multiset of absolute values over all filled entries of `items`.
pub fn support_of<'a, T, I>(items: I) -> SupportSet
where
    T: HasSupport + 'a + ?Sized,
    I: IntoIterator<Item = &'a T>,
{
    let mut s = SupportSet::new();
    for item in items {
        s.extend(item.abs_values());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_examples() {
        assert_eq!(interval_set(1, 7, 2).unwrap().values(), vec![1, 3, 5, 7]);
        assert!(interval_set(5, 4, 1).unwrap().is_empty());
        assert_eq!(interval_set(2, 14, 4).unwrap().values(), vec![2, 6, 10, 14]);
        assert!(interval_set(1, 6, 2).is_err());
        assert!(interval_set(1, 6, 0).is_err());
    }

    #[test]
    fn support_counts_duplicates() {
        let b = Block::from_rows(&[[3, -3]]).unwrap();
        let s = support_of([&b]);
        assert_eq!(s.count(3), 2);
        assert!(!s.is_set());
        assert_eq!(s.duplicates(), vec![(3, 2)]);
    }

    #[test]
    fn exact_range_check() {
        let s: SupportSet = (1..=5).collect();
        assert!(s.is_exactly_one_to(5));
        assert!(!s.is_exactly_one_to(6));
        let t: SupportSet = [1, 2, 2, 4, 5].into_iter().collect();
        assert!(!t.is_exactly_one_to(5));
    }

    #[test]
    fn four_set_elements() {
        assert_eq!(FourSet::new(6, 2).unwrap().elements(), [6, 8, 10, 12]);
        assert!(FourSet::new(1, 3).is_err());
    }
}
