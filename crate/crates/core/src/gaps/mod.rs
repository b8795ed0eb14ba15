//! Hook-length gaps of self-conjugate partitions, computed symbolically.
//!
//! Write a self-conjugate partition as `(r_1^{k_1}, …, r_m^{k_m})` with
//! `r_1 > … > r_m`, and let `K_i = k_1 + … + k_i`. The hook lengths in the
//! block of rows `(K_{i-1}, K_i]` and columns `(K_{j-1}, K_j]` form the
//! contiguous range returned by [`SelfConjugateShape::block_entry_interval`].
//! Between consecutive blocks along a diagonal sit the gap intervals
//! `G_{i,j}`; the set of non-hook-lengths in `[1, n]` is the intersection
//! over diagonals of their unions ([`SelfConjugateShape::gap_set`]).
//!
//! Everything here is interval arithmetic on `(r, k)`; no hook grid is built,
//! so shapes far too large to enumerate are fine.
//!
//! Sums that would mention `r_0` or `k_{m+1}` are replaced by `n`, and
//! `r_{m+1} = 0`.

mod ladder;
mod staircase;

use serde::Serialize;

use crate::certify::{Certificate, Rule, Verdict, Witness};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::partition::Partition;

pub use ladder::{Direction, LadderSpec};
pub use staircase::{staircase_family, StaircaseFamily, StaircaseVariant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfConjugateShape {
    alpha: Partition,
    /// `r[0]` is unused; `r[m + 1] = 0`.
    r: Vec<i64>,
    /// `k[0]` is unused.
    k: Vec<i64>,
    /// `prefix[i] = K_i`, `prefix[0] = 0`.
    prefix: Vec<i64>,
    n: i64,
}

/// Which sufficient emptiness condition settled a term of the expansion of
/// `G(α)` as a union of intersections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum EmptinessReason {
    /// Consecutive row indices jump down by two or more, or go up.
    RowJump { l: usize },
    /// Three equal consecutive row indices whose outer intervals miss.
    FlatRun { l: usize },
    /// Three consecutive row indices descending by one whose outer
    /// intervals miss.
    Descent { l: usize },
}

impl SelfConjugateShape {
    pub fn new(alpha: &Partition) -> Result<Self> {
        if !alpha.is_self_conjugate() {
            return Err(Error::domain(format!(
                "{alpha} is not self-conjugate (its conjugate is {})",
                alpha.conjugate()
            )));
        }
        let form = alpha.multiplicity_form();
        let mut r = vec![0];
        r.extend(form.values().map(|v| v as i64));
        r.push(0);
        let mut k = vec![0];
        k.extend(form.multiplicities().map(|v| v as i64));
        let mut prefix = vec![0];
        for &kk in &k[1..] {
            prefix.push(prefix.last().unwrap() + kk);
        }
        Ok(SelfConjugateShape {
            alpha: alpha.clone(),
            r,
            k,
            prefix,
            n: alpha.size() as i64,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.alpha
    }

    /// Number of distinct parts.
    pub fn m(&self) -> usize {
        self.k.len() - 1
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// `⌈m/2⌉`.
    pub fn s(&self) -> usize {
        self.m().div_ceil(2)
    }

    /// Distinct part `r_i`, `i = 1..=m+1`.
    pub fn r(&self, i: usize) -> i64 {
        self.r[i]
    }

    /// Multiplicity `k_i`, `i = 1..=m`.
    pub fn k(&self, i: usize) -> i64 {
        self.k[i]
    }

    /// `K_i = k_1 + … + k_i`, `i = 0..=m`.
    pub fn prefix(&self, i: usize) -> i64 {
        self.prefix[i]
    }

    /// Number of gap intervals along diagonal `j`: `⌊(m - j + 3)/2⌋`.
    pub fn diagonal_len(&self, j: usize) -> usize {
        (self.m() + 3 - j) / 2
    }

    /// `r_{i_1} + r_{i_2} - K_{j_1} - K_{j_2}`, or `n` when an `r_0` or a
    /// `k_{m+1}` would be involved.
    pub(crate) fn term(&self, rs: [usize; 2], ks: [usize; 2]) -> i64 {
        let m = self.m();
        if rs.contains(&0) || ks.iter().any(|&j| j > m) {
            return self.n;
        }
        self.r[rs[0]] + self.r[rs[1]] - self.prefix[ks[0]] - self.prefix[ks[1]]
    }

    /// Range of hook lengths in block `(i, j)`, for `1 ≤ i ≤ s`,
    /// `i ≤ j ≤ m`, `i + j ≤ m + 1`.
    pub fn block_entry_interval(&self, i: usize, j: usize) -> Result<Interval> {
        let m = self.m();
        if i < 1 || i > self.s() || j < i || j > m || i + j > m + 1 {
            return Err(Error::domain(format!(
                "block ({i},{j}) is outside the nonzero staircase of {}",
                self.alpha
            )));
        }
        Ok(self.block_unchecked(i, j))
    }

    fn block_unchecked(&self, i: usize, j: usize) -> Interval {
        let (r, p) = (&self.r, &self.prefix);
        Interval::new(
            r[i] + r[j] - p[i] - p[j] + 1,
            r[i] + r[j] - p[i - 1] - p[j - 1] - 1,
        )
    }

    /// Gap interval `G_{i,j}` right above-left of block `(i, j)`. Empty when
    /// `i + j ≥ m + 3`; the lower triangle mirrors the upper.
    pub fn gap_interval(&self, i: usize, j: usize) -> Interval {
        let (i, j) = if j < i { (j, i) } else { (i, j) };
        let m = self.m();
        if i == 0 || j > m || i + j >= m + 3 {
            return Interval::new(1, 0);
        }
        Interval::new(
            self.term([i, j], [i - 1, j - 1]),
            self.term([i - 1, j - 1], [i - 1, j - 1]),
        )
    }

    /// The gap intervals `G_{i, i+j-1}`, `i = 1..=M_j`, along diagonal `j`.
    pub fn diagonal_pieces(&self, j: usize) -> Vec<Interval> {
        (1..=self.diagonal_len(j))
            .map(|i| self.gap_interval(i, i + j - 1))
            .collect()
    }

    /// `G_j`, the union of the gap intervals along diagonal `j`.
    pub fn gap_diagonal_union(&self, j: usize) -> Result<IntervalSet> {
        if j < 1 || j > self.m() {
            return Err(Error::domain(format!(
                "diagonal {j} out of range 1..={}",
                self.m()
            )));
        }
        let pieces = self.diagonal_pieces(j);
        debug_assert!(
            pieces
                .windows(2)
                .all(|w| w[0].is_empty() || w[1].is_empty() || w[1].hi < w[0].lo),
            "gap pieces along diagonal {j} of {} overlap",
            self.alpha
        );
        Ok(pieces.into_iter().collect())
    }

    /// `G(α)`: integers in `[1, n]` that are not hook lengths.
    pub fn gap_set(&self) -> IntervalSet {
        let mut acc = IntervalSet::from_interval(Interval::new(1, self.n));
        for j in 1..=self.m() {
            let diag: IntervalSet = self.diagonal_pieces(j).into_iter().collect();
            acc = acc.intersection(&diag);
        }
        acc
    }

    /// Checks one term `∩_j G_{i_j, j + i_j - 1}` of the expansion of `G(α)`
    /// against the three sufficient emptiness conditions.
    ///
    /// The flat-run and descent conditions compare the outer endpoints of
    /// three consecutive intervals exactly, with strict inequality: at
    /// equality the three intervals still share one point.
    pub fn term_is_empty(&self, rows: &[usize]) -> Result<Option<EmptinessReason>> {
        let m = self.m();
        if rows.len() != m {
            return Err(Error::domain(format!(
                "index tuple has {} entries, expected {m}",
                rows.len()
            )));
        }
        for (idx, &i) in rows.iter().enumerate() {
            let j = idx + 1;
            if i < 1 || i > self.diagonal_len(j) {
                return Err(Error::domain(format!(
                    "index i_{j} = {i} outside 1..={}",
                    self.diagonal_len(j)
                )));
            }
        }
        // rows[l - 1] is i_l
        let at = |l: usize| rows[l - 1];
        for l in 1..m {
            let (a, b) = (at(l), at(l + 1));
            if a >= b + 2 || b > a {
                return Ok(Some(EmptinessReason::RowJump { l }));
            }
        }
        let (r, k) = (&self.r, &self.k);
        for l in 1..m.saturating_sub(1) {
            let (a, b, c) = (at(l), at(l + 1), at(l + 2));
            if a == b && b == c {
                let i = a;
                let lhs = r[i] + r[i + l - 1];
                let rhs = if i == 1 {
                    self.n + self.prefix[l - 1]
                } else {
                    r[i - 1] + r[i + l] - k[i + l] - k[i + l - 1]
                };
                if lhs > rhs {
                    return Ok(Some(EmptinessReason::FlatRun { l }));
                }
            }
            if a == b + 1 && b == c + 1 {
                let i = c;
                let lhs = r[i] + r[i + l + 1];
                let rhs = r[i + 1] + r[i + l] - k[i + 1] - k[i];
                if lhs > rhs {
                    return Ok(Some(EmptinessReason::Descent { l }));
                }
            }
        }
        Ok(None)
    }

    /// Direct evaluation of a term `∩_j G_{i_j, j + i_j - 1}`.
    pub fn term_intersection(&self, rows: &[usize]) -> Interval {
        rows.iter()
            .enumerate()
            .map(|(idx, &i)| self.gap_interval(i, i + idx))
            .fold(Interval::new(i64::MIN, i64::MAX), |acc, iv| {
                acc.intersect(&iv)
            })
    }

    /// All index tuples `(i_1, …, i_m)` with `1 ≤ i_j ≤ M_j`.
    pub fn index_tuples(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for j in 1..=self.m() {
            let len = self.diagonal_len(j);
            out = out
                .into_iter()
                .flat_map(|t| {
                    (1..=len).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Every part value certified by a ladder, clamped to `[1, n]`.
    pub fn predicted_zero_parts(&self) -> IntervalSet {
        let whole = Interval::new(1, self.n);
        self.ladders()
            .into_iter()
            .map(|l| l.interval.intersect(&whole))
            .collect()
    }

    /// `(|predicted_zero_parts|, |gap_set|)`.
    pub fn coverage(&self) -> (u64, u64) {
        (self.predicted_zero_parts().count(), self.gap_set().count())
    }

    pub fn report(&self) -> GapReport {
        GapReport {
            alpha: self.alpha.clone(),
            n: self.n,
            gaps: self.gap_set(),
            ladders: self
                .ladders()
                .into_iter()
                .map(|l| LadderJson {
                    v: l.v,
                    dir: l.direction,
                    lo: l.interval.lo,
                    hi: l.interval.hi,
                })
                .collect(),
            predicted_parts: self.predicted_zero_parts().iter().collect(),
        }
    }
}

/// `gaps` output: `{alpha, n, G, ladders: [{v, dir, lo, hi}], predicted_parts}`.
#[derive(Clone, Debug, Serialize)]
pub struct GapReport {
    pub alpha: Partition,
    pub n: i64,
    #[serde(rename = "G")]
    pub gaps: IntervalSet,
    pub ladders: Vec<LadderJson>,
    pub predicted_parts: Vec<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LadderJson {
    pub v: usize,
    pub dir: Direction,
    pub lo: i64,
    pub hi: i64,
}

/// Zero certificate when `β` has an even part larger than `n/2`: such a part
/// is neither the odd `(1,1)` hook nor any of the other hooks, which are all
/// at most `n/2`.
pub fn self_conj_even_big_part(
    shape: &SelfConjugateShape,
    beta: &Partition,
) -> Result<Option<Certificate>> {
    if beta.size() as i64 != shape.n() {
        return Err(Error::domain(format!(
            "class {beta} is not a partition of {}",
            shape.n()
        )));
    }
    let part = beta
        .parts()
        .iter()
        .copied()
        .find(|&x| x % 2 == 0 && 2 * x as i64 > shape.n());
    Ok(part.map(|part| Certificate {
        verdict: Verdict::Zero,
        rule: Rule::SelfConjEvenBigPart,
        witness: Witness::EvenBigPart { part },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hook::HookGrid;
    use crate::partition::{parse_partition, partitions_of};

    fn shape(text: &str) -> SelfConjugateShape {
        SelfConjugateShape::new(&parse_partition(text).unwrap()).unwrap()
    }

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::new(lo, hi)
    }

    pub(crate) fn self_conjugates(n: usize) -> impl Iterator<Item = Partition> {
        partitions_of(n).filter(Partition::is_self_conjugate)
    }

    #[test]
    fn staircase_blocks() {
        let s = shape("3,2,1");
        assert_eq!(s.block_entry_interval(1, 1).unwrap(), iv(5, 5));
        assert_eq!(s.block_entry_interval(1, 2).unwrap(), iv(3, 3));
        assert_eq!(s.block_entry_interval(1, 3).unwrap(), iv(1, 1));
        assert!(s.block_entry_interval(2, 3).is_err());
        assert!(s.block_entry_interval(3, 3).is_err());
    }

    #[test]
    fn staircase_gaps() {
        let s = shape("3,2,1");
        assert_eq!(s.gap_interval(1, 1), iv(6, 6));
        assert_eq!(s.gap_interval(2, 2), iv(2, 4));
        assert_eq!(s.gap_interval(2, 3), iv(0, 2));
        assert_eq!(s.gap_interval(1, 2), iv(4, 6));
        assert!(s.gap_interval(3, 3).is_empty());
        let ranges = |j| s.gap_diagonal_union(j).unwrap().intervals().to_vec();
        assert_eq!(ranges(1), vec![iv(2, 4), iv(6, 6)]);
        assert_eq!(ranges(2), vec![iv(0, 2), iv(4, 6)]);
        assert_eq!(ranges(3), vec![iv(2, 6)]);
        assert_eq!(s.gap_set(), IntervalSet::from_values([2, 4, 6]));
    }

    #[test]
    fn tiny_gap_sets() {
        assert!(shape("1").gap_set().is_empty());
        assert_eq!(shape("2,1").gap_set(), IntervalSet::from_values([2]));
    }

    #[test]
    fn rejects_non_self_conjugate() {
        let err = SelfConjugateShape::new(&parse_partition("2,1,1").unwrap()).unwrap_err();
        assert!(err.to_string().contains("3,1"));
    }

    #[test]
    fn gap_formulas_agree_with_block_formulas() {
        for n in 1..=24 {
            for alpha in self_conjugates(n) {
                let s = SelfConjugateShape::new(&alpha).unwrap();
                let m = s.m();
                // G_{1,j} starts right after the first-row sum and runs to n
                for j in 1..=m {
                    let g = s.gap_interval(1, j);
                    assert_eq!(g, iv(s.r(1) + s.r(j) - s.prefix(j - 1), s.n()));
                }
                // G_{i+1,j+1} lies strictly between blocks (i+1,j+1) and (i,j)
                for i in 1..=m / 2 {
                    for j in i..m {
                        if i + j > m {
                            continue;
                        }
                        let g = s.gap_interval(i + 1, j + 1);
                        let below = s.block_unchecked(i + 1, j + 1);
                        let above = s.block_unchecked(i, j);
                        assert_eq!(g, iv(below.hi + 1, above.lo - 1), "{alpha} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_bracket_their_hooks() {
        for n in 1..=20 {
            for alpha in self_conjugates(n) {
                let s = SelfConjugateShape::new(&alpha).unwrap();
                let grid = HookGrid::new(&alpha);
                for i in 1..=s.s() {
                    for j in i..=s.m() {
                        if i + j > s.m() + 1 {
                            continue;
                        }
                        let block = s.block_entry_interval(i, j).unwrap();
                        let mut seen: Vec<i64> = grid
                            .nodes()
                            .filter(|(node, _)| {
                                node.row as i64 > s.prefix(i - 1)
                                    && node.row as i64 <= s.prefix(i)
                                    && node.col as i64 > s.prefix(j - 1)
                                    && node.col as i64 <= s.prefix(j)
                            })
                            .map(|(_, h)| h as i64)
                            .collect();
                        seen.sort_unstable();
                        seen.dedup();
                        let expected: Vec<i64> = (block.lo..=block.hi).collect();
                        assert_eq!(seen, expected, "{alpha} block ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_unions_are_disjoint_and_descending() {
        for n in 1..=24 {
            for alpha in self_conjugates(n) {
                let s = SelfConjugateShape::new(&alpha).unwrap();
                for j in 1..=s.m() {
                    let pieces = s.diagonal_pieces(j);
                    for w in pieces.windows(2) {
                        assert!(w[0].lo > w[1].hi, "{alpha} diagonal {j}: {pieces:?}");
                    }
                    let union = s.gap_diagonal_union(j).unwrap();
                    let last = *pieces.last().unwrap();
                    if let Some(min) = union.min() {
                        assert!(last.contains(min), "{alpha} diagonal {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn emptiness_reasons_are_sound() {
        let s = shape("3,2,1");
        assert_eq!(
            s.term_is_empty(&[1, 2, 1]).unwrap(),
            Some(EmptinessReason::RowJump { l: 1 })
        );
        assert!(s.term_intersection(&[1, 2, 1]).is_empty());
        assert_eq!(s.term_is_empty(&[2, 1, 1]).unwrap(), None);
        assert_eq!(s.term_intersection(&[2, 1, 1]), iv(4, 4));
        assert_eq!(s.term_intersection(&[2, 2, 1]), iv(2, 2));
        // the first-row term is [2 r_1, n], never flagged
        assert_eq!(s.term_is_empty(&[1, 1, 1]).unwrap(), None);
        assert_eq!(s.term_intersection(&[1, 1, 1]), iv(6, 6));
        assert!(s.term_is_empty(&[3, 1, 1]).is_err());
        assert!(s.term_is_empty(&[1, 1]).is_err());

        for n in 1..=18 {
            for alpha in self_conjugates(n) {
                let s = SelfConjugateShape::new(&alpha).unwrap();
                let mut nonempty = 0;
                for rows in s.index_tuples() {
                    let direct = s.term_intersection(&rows);
                    if let Some(reason) = s.term_is_empty(&rows).unwrap() {
                        assert!(direct.is_empty(), "{alpha} {rows:?} {reason:?} -> {direct}");
                    }
                    if !direct.is_empty() {
                        nonempty += 1;
                    }
                }
                assert!(nonempty < 2 * s.r(1), "{alpha}: {nonempty} nonempty terms");
            }
        }
    }

    #[test]
    fn even_big_part() {
        let big = shape("13,5,2^3,1^8");
        let cert = self_conj_even_big_part(&big, &parse_partition("20,5,2^3,1").unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(cert.rule, Rule::SelfConjEvenBigPart);
        assert_eq!(cert.verdict, Verdict::Zero);
        let s = shape("3,2,1");
        let p = |t| parse_partition(t).unwrap();
        assert!(self_conj_even_big_part(&s, &p("4,2")).unwrap().is_some());
        assert!(self_conj_even_big_part(&s, &p("5,1")).unwrap().is_none());
        assert!(self_conj_even_big_part(&s, &p("5")).is_err());
    }

    #[test]
    fn report_json() {
        let doc = serde_json::to_value(shape("3,2,1").report()).unwrap();
        assert_eq!(doc["alpha"], "3,2,1");
        assert_eq!(doc["n"], 6);
        assert_eq!(doc["G"], serde_json::json!([[2, 2], [4, 4], [6, 6]]));
        assert_eq!(doc["predicted_parts"], serde_json::json!([2, 4, 6]));
        assert!(doc["ladders"]
            .as_array()
            .unwrap()
            .iter()
            .any(|l| l["dir"] == "N"));
    }
}
