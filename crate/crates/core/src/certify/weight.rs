use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::arith::factorize;

/// Nonnegative integer combinations of a set of distinct primes: the
/// possible numbers of m-th roots of unity summing to zero, where the
/// primes are those dividing m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSet {
    primes: Vec<u64>,
}

impl WeightSet {
    /// The weight set of a modulus `m ≥ 1`.
    pub fn of_modulus(m: u64) -> Self {
        assert!(m >= 1, "modulus must be positive");
        WeightSet::from_primes(factorize(m).into_iter().map(|(p, _)| p).collect())
    }

    pub fn from_primes(mut primes: Vec<u64>) -> Self {
        primes.sort_unstable();
        primes.dedup();
        WeightSet { primes }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn contains(&self, k: &BigUint) -> bool {
        match self.primes.as_slice() {
            [] => k.is_zero(),
            [p] => (k % *p).is_zero(),
            [p, q, ..] => {
                // distinct primes are coprime: everything past the Frobenius
                // number of the two smallest is representable
                let frobenius = p * q - p - q;
                match k.to_u64() {
                    Some(small) if small <= frobenius => self.reachable(small),
                    _ => true,
                }
            }
        }
    }

    fn reachable(&self, k: u64) -> bool {
        let k = k as usize;
        let mut hit = vec![false; k + 1];
        hit[0] = true;
        for v in 1..=k {
            hit[v] = self
                .primes
                .iter()
                .any(|&p| (p as usize) <= v && hit[v - p as usize]);
        }
        hit[k]
    }
}

/// Whether `k` is a nonnegative combination of the primes dividing `m`.
pub fn weight_set_contains(k: u64, m: u64) -> bool {
    WeightSet::of_modulus(m).contains(&BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: try every coefficient vector.
    fn brute(k: u64, primes: &[u64]) -> bool {
        fn go(k: u64, primes: &[u64]) -> bool {
            match primes.split_first() {
                None => k == 0,
                Some((&p, rest)) => (0..=k / p).any(|c| go(k - c * p, rest)),
            }
        }
        go(k, primes)
    }

    #[test]
    fn examples() {
        assert!(!weight_set_contains(1, 6));
        assert!(weight_set_contains(5, 6));
        assert!(weight_set_contains(0, 1));
        assert!(weight_set_contains(0, 35));
        assert!(!weight_set_contains(3, 1));
        assert!(!weight_set_contains(7, 15));
        assert!(weight_set_contains(8, 15));
    }

    #[test]
    fn agrees_with_brute_force() {
        for m in 1..=210u64 {
            let set = WeightSet::of_modulus(m);
            for k in 0..=120u64 {
                assert_eq!(
                    set.contains(&BigUint::from(k)),
                    brute(k, set.primes()),
                    "k={k} m={m}"
                );
            }
        }
    }

    #[test]
    fn huge_values() {
        let big = BigUint::from(10u32).pow(40) + 1u32;
        assert!(WeightSet::from_primes(vec![2, 3]).contains(&big));
        assert!(!WeightSet::from_primes(vec![2]).contains(&big));
    }
}
