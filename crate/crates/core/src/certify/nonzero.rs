use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::{check_sizes, Certificate, Rule, Verdict, WeightSet, Witness};
use crate::arith::lcm_of_parts;
use crate::character::degree;
use crate::error::Result;
use crate::partition::Partition;

/// Nonzero certificate from the degree of `α` and the lcm of the parts of
/// `β`. A value at an element of order `m` is a sum of `deg` m-th roots of
/// unity, so it can vanish only if `deg` lies in the weight set of `m`.
///
/// The two special cases are tried before the general weight-set test,
/// which would otherwise subsume them. The identity class (`m = 1`) is
/// skipped: there the value is the degree itself and needs no certificate.
pub fn certify_nonzero(alpha: &Partition, beta: &Partition) -> Result<Option<Certificate>> {
    check_sizes(alpha, beta)?;
    if beta.is_empty() {
        return Ok(None);
    }
    let lcm = lcm_of_parts(beta)?;
    if lcm.value.is_one() {
        return Ok(None);
    }
    let deg = degree(alpha).to_biguint().expect("degrees are positive");
    let degree_text = deg.to_string();

    if let [(p, t)] = lcm.factors[..] {
        if !(&deg % p).to_u64().is_some_and(|r| r == 0) {
            return Ok(Some(Certificate {
                verdict: Verdict::Nonzero,
                rule: Rule::PrimePowerDegree,
                witness: Witness::PrimePower {
                    prime: p,
                    exponent: t,
                    degree: degree_text,
                },
            }));
        }
    }
    if let [(p, _), (q, _)] = lcm.factors[..] {
        let frobenius = p * q - p - q;
        if deg == BigUint::from(frobenius) {
            return Ok(Some(Certificate {
                verdict: Verdict::Nonzero,
                rule: Rule::FrobeniusDegree,
                witness: Witness::Frobenius {
                    primes: [p, q],
                    frobenius_number: frobenius,
                    degree: degree_text,
                },
            }));
        }
    }
    let weights = WeightSet::from_primes(lcm.primes());
    if !weights.contains(&deg) {
        return Ok(Some(Certificate {
            verdict: Verdict::Nonzero,
            rule: Rule::WeightSet,
            witness: Witness::WeightSet {
                modulus: lcm.value.to_string(),
                primes: weights.primes().to_vec(),
                degree: degree_text,
            },
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::mn_value;
    use crate::partition::{parse_partition, partitions_of};
    use num_traits::Zero;

    fn p(text: &str) -> Partition {
        parse_partition(text).unwrap()
    }

    fn rule(alpha: &str, beta: &str) -> Option<Rule> {
        certify_nonzero(&p(alpha), &p(beta))
            .unwrap()
            .map(|c| c.rule)
    }

    #[test]
    fn examples() {
        assert_eq!(rule("2,1^6", "5,3"), Some(Rule::FrobeniusDegree));
        assert_eq!(mn_value(&p("2,1^6"), &p("5,3")).unwrap(), (-1).into());
        assert_eq!(rule("2,1^5", "4,2,1"), None);
        assert_eq!(rule("2,1^7", "3,3,3"), Some(Rule::PrimePowerDegree));
        assert_eq!(rule("2,2", "1^4"), None);
        assert!(certify_nonzero(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn general_weight_set_rule() {
        // three primes, degree 1
        assert_eq!(rule("10", "5,3,2"), Some(Rule::WeightSet));
        // lcm 4, degree 4 is even
        assert_eq!(rule("4,1", "4,1"), None);
    }

    #[test]
    fn sound_up_to_nine() {
        for n in 1..=9 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    if certify_nonzero(&a, &b).unwrap().is_some() {
                        assert!(!mn_value(&a, &b).unwrap().is_zero(), "{a} at {b}");
                    }
                }
            }
        }
    }
}
