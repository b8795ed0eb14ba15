//! Integer partitions in canonical (weakly decreasing) form.
//!
//! A [`Partition`] indexes both the irreducible characters and the conjugacy
//! classes of S_n. Every constructor normalizes its input, so two values with
//! the same multiset of parts always compare (and hash) equal.
//!
//! Text form: comma-separated tokens `v` or `v^k`, whitespace ignored, e.g.
//! `13,5,2^3,1^8`. The empty partition prints as `()`; both `()` and the
//! empty string parse back to it.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest `n` accepted by the structural operations.
pub const MAX_SIZE: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

/// A node `(row, col)` of a Young diagram, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Parity of a permutation with a given cycle type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Distinct part values with their multiplicities, largest value first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityForm {
    pairs: Vec<(usize, usize)>,
}

impl MultiplicityForm {
    /// `(value, multiplicity)` pairs with strictly decreasing values.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of distinct parts.
    pub fn distinct(&self) -> usize {
        self.pairs.len()
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(r, _)| r)
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(_, k)| k)
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .pairs
            .iter()
            .flat_map(|&(r, k)| std::iter::repeat_n(r, k))
            .collect();
        Partition::from_sorted_unchecked(parts)
    }
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::domain(format!(
                "partition part at position {} is zero",
                pos + 1
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = checked_size(&parts)?;
        Ok(Partition { parts, size })
    }

    /// Builds a partition, silently dropping zero parts. Used where zeros are
    /// padding (e.g. after rim removal).
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition::from_sorted_unchecked(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::from_sorted_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` with 1-based indexing; 0 past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    pub fn contains_part(&self, value: usize) -> bool {
        self.parts.binary_search_by(|p| value.cmp(p)).is_ok()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.largest_part());
        for i in 1..=self.largest_part() {
            out.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        Partition::from_sorted_unchecked(out)
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn multiplicity_form(&self) -> MultiplicityForm {
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match pairs.last_mut() {
                Some((r, k)) if *r == p => *k += 1,
                _ => pairs.push((p, 1)),
            }
        }
        MultiplicityForm { pairs }
    }

    /// Parity of a permutation of this cycle type.
    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.parts.iter().map(|p| p - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Removes one occurrence of `value`, if present.
    pub fn without_part(&self, value: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == value)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition::from_sorted_unchecked(parts))
    }
}

fn checked_size(parts: &[usize]) -> Result<usize> {
    let mut total: usize = 0;
    for &p in parts {
        total = total
            .checked_add(p)
            .filter(|&t| t <= MAX_SIZE)
            .ok_or_else(|| Error::domain(format!("partition size exceeds limit {MAX_SIZE}")))?;
    }
    Ok(total)
}

/// Parses the text form, e.g. `13,5,2^3,1^8`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "()" {
        return Ok(Partition::empty());
    }
    let body = compact
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(&compact);
    let mut parts = Vec::new();
    for token in body.split(',') {
        let (value, count) = match token.split_once('^') {
            Some((v, k)) => (parse_positive(token, v)?, parse_positive(token, k)?),
            None => (parse_positive(token, token)?, 1),
        };
        if count > MAX_SIZE {
            return Err(Error::Parse {
                token: token.to_string(),
                reason: format!("multiplicity exceeds limit {MAX_SIZE}"),
            });
        }
        parts.extend(std::iter::repeat_n(value, count));
    }
    Partition::new(parts).map_err(|e| match e {
        Error::Domain(reason) => Error::Parse {
            token: text.to_string(),
            reason,
        },
        other => other,
    })
}

fn parse_positive(token: &str, digits: &str) -> Result<usize> {
    let err = |reason: &str| Error::Parse {
        token: token.to_string(),
        reason: reason.to_string(),
    };
    if digits.is_empty() {
        return Err(err("empty token"));
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err("expected a positive integer"));
    }
    let value: usize = digits.parse().map_err(|_| err("integer out of range"))?;
    if value == 0 {
        return Err(err("values must be positive"));
    }
    Ok(value)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl fmt::Display for Partition {
    /// Exponent-compressed canonical form: `13,5,2^3,1^8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        for (idx, (r, k)) in self.multiplicity_form().pairs.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            if *k == 1 {
                write!(f, "{r}")?;
            } else {
                write!(f, "{r}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first,
/// `(1^n)` last. For `n = 0` the single empty partition.
pub fn partitions_of(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::from_sorted_unchecked(parts.clone());

        let mut next = parts;
        let mut rest = 0;
        while next.last() == Some(&1) {
            next.pop();
            rest += 1;
        }
        if let Some(last) = next.pop() {
            let cap = last - 1;
            rest += 1;
            next.push(cap);
            while rest >= cap {
                next.push(cap);
                rest -= cap;
            }
            if rest > 0 {
                next.push(rest);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}
