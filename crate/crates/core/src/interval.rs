//! Closed integer intervals and finite unions of them.

use std::fmt;

use serde::Serialize;

/// `[lo, hi] ∩ ℤ`; empty whenever `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo) as u64 + 1
        }
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        self.is_empty() || (other.lo <= self.lo && self.hi <= other.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Sorted, pairwise disjoint and non-adjacent nonempty intervals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    runs: Vec<Interval>,
}

impl IntervalSet {
    pub fn new() -> Self {
        IntervalSet::default()
    }

    pub fn from_interval(iv: Interval) -> Self {
        let mut set = IntervalSet::new();
        set.insert(iv);
        set
    }

    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Self {
        let mut set = IntervalSet::new();
        for v in values {
            set.insert(Interval::new(v, v));
        }
        set
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of integers in the set.
    pub fn count(&self) -> u64 {
        self.runs.iter().map(Interval::len).sum()
    }

    pub fn min(&self) -> Option<i64> {
        self.runs.first().map(|iv| iv.lo)
    }

    pub fn max(&self) -> Option<i64> {
        self.runs.last().map(|iv| iv.hi)
    }

    pub fn contains(&self, x: i64) -> bool {
        let idx = self.runs.partition_point(|iv| iv.hi < x);
        self.runs.get(idx).is_some_and(|iv| iv.lo <= x)
    }

    /// The run containing `x`, if any.
    pub fn run_containing(&self, x: i64) -> Option<Interval> {
        let idx = self.runs.partition_point(|iv| iv.hi < x);
        self.runs.get(idx).filter(|iv| iv.lo <= x).copied()
    }

    pub fn insert(&mut self, iv: Interval) {
        if iv.is_empty() {
            return;
        }
        let mut lo = iv.lo;
        let mut hi = iv.hi;
        // first run that could touch [lo, hi]: its hi ≥ lo - 1
        let start = self.runs.partition_point(|r| r.hi < lo.saturating_sub(1));
        let mut end = start;
        while end < self.runs.len() && self.runs[end].lo <= hi.saturating_add(1) {
            lo = lo.min(self.runs[end].lo);
            hi = hi.max(self.runs[end].hi);
            end += 1;
        }
        self.runs
            .splice(start..end, std::iter::once(Interval::new(lo, hi)));
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = self.clone();
        for &iv in &other.runs {
            out.insert(iv);
        }
        out
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.runs.len() && j < other.runs.len() {
            let a = self.runs[i];
            let b = other.runs[j];
            let cut = a.intersect(&b);
            if !cut.is_empty() {
                out.push(cut);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        // adjacent pieces cannot arise: each comes from distinct non-adjacent runs
        IntervalSet { runs: out }
    }

    pub fn intersect_interval(&self, iv: Interval) -> IntervalSet {
        self.intersection(&IntervalSet::from_interval(iv))
    }

    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.intersection(other) == *self
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.runs.iter().flat_map(|iv| iv.lo..=iv.hi)
    }
}

impl FromIterator<Interval> for IntervalSet {
    fn from_iter<T: IntoIterator<Item = Interval>>(iter: T) -> Self {
        let mut set = IntervalSet::new();
        for iv in iter {
            set.insert(iv);
        }
        set
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("∅");
        }
        for (i, iv) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.runs.len()))?;
        for iv in &self.runs {
            seq.serialize_element(&[iv.lo, iv.hi])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn insert_merges_adjacent_runs() {
        let mut set = IntervalSet::new();
        set.insert(Interval::new(1, 2));
        set.insert(Interval::new(5, 6));
        set.insert(Interval::new(3, 4));
        assert_eq!(set.intervals(), &[Interval::new(1, 6)]);
        set.insert(Interval::new(9, 8));
        assert_eq!(set.count(), 6);
    }

    #[test]
    fn membership() {
        let set = IntervalSet::from_values([2, 4, 6]);
        assert!(set.contains(4) && !set.contains(5) && !set.contains(0));
        assert_eq!(set.run_containing(6), Some(Interval::new(6, 6)));
    }

    fn as_set(s: &IntervalSet) -> BTreeSet<i64> {
        s.iter().collect()
    }

    fn arb_set() -> impl Strategy<Value = IntervalSet> {
        prop::collection::vec((-20i64..40, 0i64..8), 0..6).prop_map(|v| {
            v.into_iter()
                .map(|(lo, w)| Interval::new(lo, lo + w - 1))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn set_algebra_matches_btreeset(a in arb_set(), b in arb_set()) {
            let (sa, sb) = (as_set(&a), as_set(&b));
            prop_assert_eq!(as_set(&a.union(&b)), &sa | &sb);
            prop_assert_eq!(as_set(&a.intersection(&b)), &sa & &sb);
            let u = a.union(&b);
            for w in u.intervals().windows(2) {
                prop_assert!(w[0].hi + 1 < w[1].lo);
            }
            let i = a.intersection(&b);
            for w in i.intervals().windows(2) {
                prop_assert!(w[0].hi + 1 < w[1].lo);
            }
        }
    }
}
