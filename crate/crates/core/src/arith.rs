//! Integer helpers: primes, factorizations, factorials, valuations.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not prime")))
    }
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&q| is_prime(q)).collect()
}

/// Prime factorization as `(prime, exponent)` pairs, primes increasing.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exponent of `p` in a nonzero integer. Returns `None` for zero.
pub fn valuation(value: &BigUint, p: u64) -> Option<u32> {
    if value.is_zero() {
        return None;
    }
    let p = BigUint::from(p);
    let mut v = value.clone();
    let mut e = 0;
    loop {
        let (q, r) = v.div_rem(&p);
        if !r.is_zero() {
            return Some(e);
        }
        v = q;
        e += 1;
    }
}

/// The p-adic valuation of `binomial(a + b, b)`, counted as the number of
/// carries when `a` and `b` are added in base `p`.
pub fn kummer_valuation(a: u64, b: u64, p: u64) -> Result<u32> {
    require_prime(p)?;
    let (mut a, mut b) = (a, b);
    let mut carry = 0;
    let mut carries = 0;
    while a > 0 || b > 0 || carry > 0 {
        let digit_sum = a % p + b % p + carry;
        carry = if digit_sum >= p { 1 } else { 0 };
        carries += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(carries)
}

/// Least common multiple of the parts of a cycle type together with its
/// prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartsLcm {
    #[serde(serialize_with = "crate::arith::ser_decimal")]
    pub value: BigUint,
    pub factors: Vec<(u64, u32)>,
}

impl PartsLcm {
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }
}

pub fn lcm_of_parts(beta: &Partition) -> Result<PartsLcm> {
    if beta.is_empty() {
        return Err(Error::domain("lcm of the empty partition is undefined"));
    }
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for &part in beta.multiplicity_form().values().collect::<Vec<_>>().iter() {
        for (q, e) in factorize(part as u64) {
            match factors.iter_mut().find(|(r, _)| *r == q) {
                Some(entry) => entry.1 = entry.1.max(e),
                None => factors.push((q, e)),
            }
        }
    }
    factors.sort_unstable();
    let value = factors
        .iter()
        .fold(BigUint::one(), |acc, &(q, e)| acc * BigUint::from(q).pow(e));
    Ok(PartsLcm { value, factors })
}

/// Order of the centralizer of a permutation of cycle type `beta`:
/// the product of `i^t * t!` over part values `i` with multiplicity `t`.
pub fn centralizer_size(beta: &Partition) -> BigUint {
    beta.multiplicity_form()
        .pairs()
        .iter()
        .fold(BigUint::one(), |acc, &(value, mult)| {
            acc * BigUint::from(value as u64).pow(mult as u32) * factorial(mult)
        })
}

pub(crate) fn ser_decimal<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
