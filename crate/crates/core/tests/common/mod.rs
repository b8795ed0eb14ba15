//! Independent reference implementations used by the integration tests.
//!
//! The character oracle never touches rim hooks: it expands the power sum
//! `p_β` into monomials and reads `χ^λ(β)` off the alternant,
//! `χ^λ(β) = Σ_σ sgn(σ) [x^{λ+δ-σ(δ)}] p_β` in `ℓ(λ)` variables.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use symchar::Partition;

type Poly = HashMap<Vec<usize>, BigInt>;

/// Expands `p_β` in `vars` variables, dropping monomials whose exponent in
/// some variable exceeds `cap[i]`.
fn power_sum(beta: &[usize], vars: usize, cap: &[usize]) -> Poly {
    let mut poly: Poly = HashMap::new();
    poly.insert(vec![0; vars], BigInt::from(1));
    for &k in beta {
        let mut next: Poly = HashMap::new();
        for (mono, coef) in &poly {
            for i in 0..vars {
                if mono[i] + k > cap[i] {
                    continue;
                }
                let mut m = mono.clone();
                m[i] += k;
                *next.entry(m).or_insert_with(BigInt::zero) += coef;
            }
        }
        poly = next;
    }
    poly
}

/// All permutations of `0..len` with their signs.
fn permutations(len: usize) -> Vec<(Vec<usize>, i32)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i32)>) {
        if prefix.len() == used.len() {
            let mut inversions = 0;
            for i in 0..prefix.len() {
                for j in i + 1..prefix.len() {
                    if prefix[i] > prefix[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; len], &mut out);
    out
}

/// Character value from the power-sum expansion.
pub fn sf_character(lambda: &Partition, beta: &Partition) -> BigInt {
    assert_eq!(lambda.size(), beta.size());
    let vars = lambda.len();
    if vars == 0 {
        return BigInt::from(1);
    }
    let target: Vec<usize> = (0..vars)
        .map(|i| lambda.parts()[i] + (vars - 1 - i))
        .collect();
    let poly = power_sum(beta.parts(), vars, &target);
    let mut total = BigInt::zero();
    for (sigma, sign) in permutations(vars) {
        let mut exps = Vec::with_capacity(vars);
        let mut ok = true;
        for i in 0..vars {
            let shift = vars - 1 - sigma[i];
            match target[i].checked_sub(shift) {
                Some(e) => exps.push(e),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        if let Some(c) = poly.get(&exps) {
            if sign > 0 {
                total += c;
            } else {
                total -= c;
            }
        }
    }
    total
}

/// Hook lengths straight from the definition `arm + leg + 1`.
pub fn hook_lengths(alpha: &Partition) -> Vec<Vec<usize>> {
    let conj = alpha.conjugate();
    alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (0..row)
                .map(|j| (row - j - 1) + (conj.parts()[j] - i - 1) + 1)
                .collect()
        })
        .collect()
}

pub fn p(text: &str) -> Partition {
    symchar::partition::parse_partition(text).unwrap()
}
