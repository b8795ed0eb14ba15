//! Base-p digits and p-adic type of cycle types.

use serde::Serialize;

use crate::arith::require_prime;
use crate::error::Result;
use crate::partition::Partition;

/// Base-`p` digits of an integer, least significant first, with no trailing
/// zero digit (empty for 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PAdicDigits {
    pub p: u64,
    pub digits: Vec<u64>,
}

impl PAdicDigits {
    /// Digit `i`, zero beyond the top digit.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

pub fn p_adic_digits(n: u64, p: u64) -> Result<PAdicDigits> {
    require_prime(p)?;
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    Ok(PAdicDigits { p, digits })
}

/// Largest `i` with `p^i | value`, for `value > 0`.
pub(crate) fn exact_power(mut value: u64, p: u64) -> usize {
    let mut e = 0;
    while value.is_multiple_of(p) {
        value /= p;
        e += 1;
    }
    e
}

/// True when, for every `i`, the parts exactly divisible by `p^i` sum to
/// `a_i p^i`, where `a_i` are the base-`p` digits of `|beta|`.
pub fn is_p_adic_type(beta: &Partition, p: u64) -> Result<bool> {
    let digits = p_adic_digits(beta.size() as u64, p)?;
    let mut sums = vec![0u64; digits.digits.len().max(1)];
    for &part in beta.parts() {
        let e = exact_power(part as u64, p);
        if e >= sums.len() {
            // part ≤ n < p^(t+1), so this cannot happen for a partition of n
            return Ok(false);
        }
        sums[e] += part as u64;
    }
    let mut scale = 1u64;
    for (i, &s) in sums.iter().enumerate() {
        if s != digits.digit(i) * scale {
            return Ok(false);
        }
        scale = scale.saturating_mul(p);
    }
    Ok(true)
}
