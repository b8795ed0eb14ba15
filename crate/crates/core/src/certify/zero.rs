use serde::Serialize;

use super::{
    check_sizes, Certificate, Certifier, ProcessWitness, Rule, StageWitness, VanishingPath,
    Verdict, Witness,
};
use crate::arith::{is_prime, valuation};
use crate::character::{degree, removal_sequences};
use crate::error::{Error, Result};
use crate::padic::is_p_adic_type;
use crate::partition::Partition;

/// Zero for a hook `α = (a, 1^{n-a})` with `n - a ≥ a > 1` at a class made
/// of parts `≥ a` together with one `a` and one `1`. Removing the large
/// parts from the hook leaves a smaller hook; the `a`-cycle can never leave
/// a single box behind once the leg is at least `a`.
pub fn certify_zero_hook_chain(alpha: &Partition, beta: &Partition) -> Result<Option<Certificate>> {
    check_sizes(alpha, beta)?;
    let n = alpha.size();
    let a = alpha.largest_part();
    let is_hook = alpha.len() == n - a + 1;
    if !is_hook || a < 2 || n - a < a {
        return Ok(None);
    }
    let Some(rest) = beta.without_part(a).and_then(|r| r.without_part(1)) else {
        return Ok(None);
    };
    if rest.parts().iter().any(|&b| b < a) {
        return Ok(None);
    }
    Ok(Some(Certificate {
        verdict: Verdict::Zero,
        rule: Rule::HookChainMissing,
        witness: Witness::HookChain {
            arm: a,
            removed: rest.parts().to_vec(),
        },
    }))
}

/// Shape `(a, cp+1, 2^l, 1^k)` matched against a class `(a+l+k+1, γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneStepFamily {
    pub a: usize,
    pub c: usize,
    pub l: usize,
    pub k: usize,
    pub p: u64,
    pub gamma: Partition,
}

/// Shape `(a, b, cp+2, 3^l, 2^t, 1^k)` matched against a class
/// `(a+l+t+k+2, b+l+t, γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoStepFamily {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub l: usize,
    pub t: usize,
    pub k: usize,
    pub p: u64,
    pub gamma: Partition,
}

/// Counts of each value `≤ top` in `tail`, or `None` if `tail` holds a
/// larger value. `tail` is weakly decreasing.
fn small_tail(tail: &[usize], top: usize) -> Option<Vec<usize>> {
    let mut counts = vec![0; top + 1];
    for &v in tail {
        if v > top {
            return None;
        }
        counts[v] += 1;
    }
    Some(counts)
}

/// Primes `p` with `value = c p + offset` for some `c ≥ 1`.
fn prime_splits(value: usize, offset: usize) -> Vec<(u64, usize)> {
    let Some(cp) = value.checked_sub(offset).filter(|&cp| cp > 0) else {
        return Vec::new();
    };
    (2..=cp as u64)
        .filter(|&p| (cp as u64).is_multiple_of(p) && is_prime(p))
        .map(|p| (p, cp / p as usize))
        .collect()
}

pub fn match_one_step_family(alpha: &Partition, beta: &Partition) -> Option<OneStepFamily> {
    let parts = alpha.parts();
    if parts.len() < 2 {
        return None;
    }
    let (a, second) = (parts[0], parts[1]);
    let counts = small_tail(&parts[2..], 2)?;
    let (l, k) = (counts[2], counts[1]);
    let gamma = beta.without_part(a + l + k + 1)?;
    prime_splits(second, 1).into_iter().find_map(|(p, c)| {
        let m = c * p as usize + l;
        let fits = !m.is_multiple_of(p as usize) && gamma.size() > 1;
        (fits && is_p_adic_type(&gamma, p).ok()?).then(|| OneStepFamily {
            a,
            c,
            l,
            k,
            p,
            gamma: gamma.clone(),
        })
    })
}

pub fn match_two_step_family(alpha: &Partition, beta: &Partition) -> Option<TwoStepFamily> {
    let parts = alpha.parts();
    if parts.len() < 3 {
        return None;
    }
    let (a, b, third) = (parts[0], parts[1], parts[2]);
    let counts = small_tail(&parts[3..], 3)?;
    let (l, t, k) = (counts[3], counts[2], counts[1]);
    let gamma = beta
        .without_part(a + l + t + k + 2)?
        .without_part(b + l + t)?;
    prime_splits(third, 2).into_iter().find_map(|(p, c)| {
        let m = c * p as usize + l;
        let fits = !m.is_multiple_of(p as usize) && gamma.size() > 1;
        (fits && is_p_adic_type(&gamma, p).ok()?).then(|| TwoStepFamily {
            a,
            b,
            c,
            l,
            t,
            k,
            p,
            gamma: gamma.clone(),
        })
    })
}

impl Certifier<'_> {
    /// Whether `γ` is p-vanishing, by p-adic type or, for small `γ`, by
    /// brute force.
    fn vanishing_path(&self, gamma: &Partition, p: u64) -> Option<VanishingPath> {
        if is_p_adic_type(gamma, p).unwrap_or(false) {
            return Some(VanishingPath::PAdicType);
        }
        if gamma.size() > self.config().vanishing_bound {
            return None;
        }
        let key = (gamma.clone(), p);
        let vanishes = match self.vanishing.get(&key) {
            Some(hit) => *hit,
            None => {
                let v = self
                    .engine()
                    .is_p_vanishing_class(p, gamma)
                    .unwrap_or(false);
                self.vanishing.insert(key, v);
                v
            }
        };
        vanishes.then_some(VanishingPath::BruteForce)
    }

    /// Zero when every way of removing rim hooks of lengths `prefix` leaves
    /// a diagram of degree divisible by `p`, and `rest` is a p-vanishing
    /// class of size greater than one.
    pub fn certify_zero_staged(
        &self,
        alpha: &Partition,
        prefix: &[usize],
        rest: &Partition,
        p: u64,
    ) -> Result<Option<ProcessWitness>> {
        if prefix.iter().sum::<usize>() + rest.size() != alpha.size() {
            return Err(Error::domain(format!(
                "cycle lengths {prefix:?} and {rest} do not add up to |{alpha}|"
            )));
        }
        if !is_prime(p) || rest.size() <= 1 {
            return Ok(None);
        }
        let sequences = removal_sequences(alpha, prefix);
        let mut stages = Vec::with_capacity(sequences.len());
        for seq in sequences {
            let deg = degree(&seq.result)
                .to_biguint()
                .expect("degrees are positive");
            let v = valuation(&deg, p).expect("degrees are nonzero");
            if v == 0 {
                return Ok(None);
            }
            stages.push(StageWitness {
                nodes: seq.nodes,
                result: seq.result,
                sign: seq.sign,
                degree_valuation: v,
            });
        }
        let Some(path) = self.vanishing_path(rest, p) else {
            return Ok(None);
        };
        Ok(Some(ProcessWitness {
            s: prefix.len(),
            prefix: prefix.to_vec(),
            rest: rest.clone(),
            prime: p,
            sequence_count: stages.len(),
            sequences: stages,
            vanishing_by: path,
            family: None,
        }))
    }

    /// Staged removal on the canonical `β`: the first `s` parts are removed
    /// as rim hooks and the remaining parts must form a p-vanishing class.
    pub fn certify_zero_process(
        &self,
        alpha: &Partition,
        beta: &Partition,
        s: usize,
        p: u64,
    ) -> Result<Option<Certificate>> {
        check_sizes(alpha, beta)?;
        if s == 0 || s >= beta.len() {
            return Err(Error::domain(format!(
                "split index {s} out of range 1..{} for {beta}",
                beta.len()
            )));
        }
        let (prefix, tail) = beta.parts().split_at(s);
        let rest = Partition::from_sorted_unchecked(tail.to_vec());
        Ok(self
            .certify_zero_staged(alpha, prefix, &rest, p)?
            .map(process_certificate))
    }

    pub fn certify_one_step_family(
        &self,
        alpha: &Partition,
        beta: &Partition,
    ) -> Result<Option<Certificate>> {
        check_sizes(alpha, beta)?;
        let Some(m) = match_one_step_family(alpha, beta) else {
            return Ok(None);
        };
        let prefix = [m.a + m.l + m.k + 1];
        Ok(self
            .certify_zero_staged(alpha, &prefix, &m.gamma, m.p)?
            .map(|mut w| {
                w.family = Some("one_step".into());
                process_certificate(w)
            }))
    }

    pub fn certify_two_step_family(
        &self,
        alpha: &Partition,
        beta: &Partition,
    ) -> Result<Option<Certificate>> {
        check_sizes(alpha, beta)?;
        let Some(m) = match_two_step_family(alpha, beta) else {
            return Ok(None);
        };
        let prefix = [m.a + m.l + m.t + m.k + 2, m.b + m.l + m.t];
        Ok(self
            .certify_zero_staged(alpha, &prefix, &m.gamma, m.p)?
            .map(|mut w| {
                w.family = Some("two_step".into());
                process_certificate(w)
            }))
    }
}

fn process_certificate(witness: ProcessWitness) -> Certificate {
    Certificate {
        verdict: Verdict::Zero,
        rule: Rule::ProcessVanishing,
        witness: Witness::Process(Box::new(witness)),
    }
}
