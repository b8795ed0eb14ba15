use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::hook::{max_hook, rim_hooks, HookGrid};
use crate::partition::Partition;

/// Character values of S_n are rational integers of unbounded size.
pub type CharacterValue = BigInt;

/// Memo key: the current sub-diagram and the cycle lengths still to be
/// consumed, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MemoKey {
    pub shape: Partition,
    pub rest: Vec<usize>,
}

/// Murnaghan-Nakayama evaluator with a shared memo table.
///
/// The cache accepts concurrent readers and writers. Two threads racing on
/// the same key compute the same value, so whichever insert lands is fine.
#[derive(Debug, Default)]
pub struct CharacterEngine {
    cache: DashMap<MemoKey, BigInt>,
    cap: Option<usize>,
}

impl CharacterEngine {
    pub fn new() -> Self {
        CharacterEngine::default()
    }

    /// An engine that stops memoizing once `cap` entries are stored.
    pub fn with_capacity_cap(cap: usize) -> Self {
        CharacterEngine {
            cache: DashMap::new(),
            cap: Some(cap),
        }
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }

    pub(crate) fn cache_entries(&self) -> Vec<(MemoKey, BigInt)> {
        self.cache
            .iter()
            .map(|e| (e.key().clone(), e.value().clone()))
            .collect()
    }

    pub(crate) fn seed(&self, key: MemoKey, value: BigInt) {
        self.remember(key, value);
    }

    fn remember(&self, key: MemoKey, value: BigInt) {
        if self.cap.is_some_and(|cap| self.cache.len() >= cap) {
            return;
        }
        self.cache.insert(key, value);
    }

    /// `χ^α(β)`.
    pub fn value(&self, alpha: &Partition, beta: &Partition) -> Result<CharacterValue> {
        if alpha.size() != beta.size() {
            return Err(Error::domain(format!(
                "character {alpha} has size {} but class {beta} has size {}",
                alpha.size(),
                beta.size()
            )));
        }
        Ok(self.eval(alpha, beta.parts()))
    }

    /// Value of the character of `shape` at the class with cycle lengths
    /// `rest` (weakly decreasing, summing to `|shape|`).
    pub(crate) fn eval(&self, shape: &Partition, rest: &[usize]) -> BigInt {
        let Some((&k, tail)) = rest.split_first() else {
            debug_assert!(shape.is_empty());
            return BigInt::one();
        };
        if k > max_hook(shape) {
            return BigInt::zero();
        }
        if shape.len() == 1 || shape.largest_part() == 1 {
            // trivial and sign characters
            let odd = rest.iter().map(|c| c - 1).sum::<usize>() % 2 == 1;
            return if shape.largest_part() == 1 && shape.len() > 1 && odd {
                -BigInt::one()
            } else {
                BigInt::one()
            };
        }
        let key = MemoKey {
            shape: shape.clone(),
            rest: rest.to_vec(),
        };
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        for hook in rim_hooks(shape, k) {
            let sub = self.eval(&hook.residual, tail);
            if hook.leg % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.remember(key, total.clone());
        total
    }
}

/// Degree of `χ^α` from the hook-length formula.
pub fn degree(alpha: &Partition) -> CharacterValue {
    let hooks = HookGrid::new(alpha)
        .nodes()
        .fold(BigUint::one(), |acc, (_, h)| acc * h as u64);
    let (quotient, remainder) = factorial(alpha.size()).div_rem(&hooks);
    assert!(
        remainder.is_zero(),
        "hook product of {alpha} does not divide n!; hook grid is inconsistent"
    );
    BigInt::from(quotient)
}

/// `χ^α(β)` on a throwaway engine.
pub fn mn_value(alpha: &Partition, beta: &Partition) -> Result<CharacterValue> {
    CharacterEngine::new().value(alpha, beta)
}
