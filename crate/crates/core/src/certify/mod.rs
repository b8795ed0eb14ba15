//! Certificates that a character value vanishes or does not.
//!
//! Each rule inspects `(α, β)` without running the Murnaghan-Nakayama
//! recursion on the pair itself and, when it applies, returns a
//! [`Certificate`] carrying enough witness data to be re-checked by hand.
//! [`Certifier::certify`] tries the rules in a fixed order and returns the
//! first that fires:
//!
//! 1. self-conjugate `α`: odd class, part in the gap set, even part > n/2;
//! 2. nonzero rules: prime-power degree, Frobenius-number degree, weight set;
//! 3. the hook-chain zero for `α = (a, 1^{n-a})`;
//! 4. staged removal with a p-vanishing remainder, splitting the canonical
//!    `β` after `s = 1..=max_split` parts, over primes `p ≤ n`;
//! 5. the one- and two-step removal families (staged removal with a
//!    reordered prefix);
//! 6. optionally the exact value.

mod nonzero;
mod vanishing;
mod weight;
mod zero;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::primes_up_to;
use crate::character::CharacterEngine;
use crate::error::{Error, Result};
use crate::gaps::{self, Direction, SelfConjugateShape};
use crate::interval::Interval;
use crate::partition::{Node, Parity, Partition};

pub use nonzero::certify_nonzero;
pub use vanishing::{is_p_vanishing_class, scan_p_vanishing, ScanReport, VanishingEntry};
pub use weight::{weight_set_contains, WeightSet};
pub use zero::{
    certify_zero_hook_chain, match_one_step_family, match_two_step_family, OneStepFamily,
    TwoStepFamily,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Zero,
    Nonzero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    WeightSet,
    PrimePowerDegree,
    FrobeniusDegree,
    HookChainMissing,
    ProcessVanishing,
    SelfConjOdd,
    SelfConjEvenBigPart,
    GapInterval,
    ExactMN,
}

/// How the remaining class was shown to be p-vanishing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VanishingPath {
    PAdicType,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageWitness {
    pub nodes: Vec<Node>,
    pub result: Partition,
    pub sign: i8,
    /// Exponent of the prime in the degree of `result`.
    pub degree_valuation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProcessWitness {
    pub s: usize,
    pub prefix: Vec<usize>,
    pub rest: Partition,
    pub prime: u64,
    pub sequence_count: usize,
    pub sequences: Vec<StageWitness>,
    pub vanishing_by: VanishingPath,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    WeightSet {
        modulus: String,
        primes: Vec<u64>,
        degree: String,
    },
    PrimePower {
        prime: u64,
        exponent: u32,
        degree: String,
    },
    Frobenius {
        primes: [u64; 2],
        frobenius_number: u64,
        degree: String,
    },
    HookChain {
        arm: usize,
        /// Cycle lengths removed before the `(arm, 1)` remainder.
        removed: Vec<usize>,
    },
    Process(Box<ProcessWitness>),
    OddClass {
        parity: Parity,
    },
    EvenBigPart {
        part: usize,
    },
    Gap {
        part: usize,
        interval: Interval,
        #[serde(skip_serializing_if = "Option::is_none")]
        ladder: Option<LadderRef>,
    },
    Exact {
        value: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LadderRef {
    pub v: usize,
    pub dir: Direction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub rule: Rule,
    pub witness: Witness,
}

/// Certificate JSON: `{alpha, beta, verdict, rule, witness, verified_by_mn}`.
/// The verdict, rule and witness are `null` when no rule fired.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub alpha: Partition,
    pub beta: Partition,
    pub verdict: Option<Verdict>,
    pub rule: Option<Rule>,
    pub witness: Option<Witness>,
    pub verified_by_mn: Option<bool>,
}

impl CertificateRecord {
    pub fn new(alpha: &Partition, beta: &Partition, cert: Option<&Certificate>) -> Self {
        CertificateRecord {
            alpha: alpha.clone(),
            beta: beta.clone(),
            verdict: cert.map(|c| c.verdict),
            rule: cert.map(|c| c.rule),
            witness: cert.map(|c| c.witness.clone()),
            verified_by_mn: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

impl Certificate {
    /// Whether an exact value agrees with the verdict.
    pub fn agrees_with(&self, value: &BigInt) -> bool {
        match self.verdict {
            Verdict::Zero => value.is_zero(),
            Verdict::Nonzero => !value.is_zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyConfig {
    /// Largest remaining class tested for p-vanishing by brute force.
    pub vanishing_bound: usize,
    /// Largest split index `s` tried by the staged-removal rule.
    pub max_split: usize,
    /// Fall back to the exact value when no rule fires.
    pub fallback_exact: bool,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            vanishing_bound: 12,
            max_split: 3,
            fallback_exact: false,
        }
    }
}

pub(crate) fn check_sizes(alpha: &Partition, beta: &Partition) -> Result<()> {
    if alpha.size() != beta.size() {
        return Err(Error::domain(format!(
            "character {alpha} and class {beta} have different sizes"
        )));
    }
    Ok(())
}

/// Rule dispatcher with a shared character engine and a cache of
/// p-vanishing verdicts.
pub struct Certifier<'e> {
    engine: &'e CharacterEngine,
    config: CertifyConfig,
    vanishing: DashMap<(Partition, u64), bool>,
}

impl<'e> Certifier<'e> {
    pub fn new(engine: &'e CharacterEngine) -> Self {
        Certifier::with_config(engine, CertifyConfig::default())
    }

    pub fn with_config(engine: &'e CharacterEngine, config: CertifyConfig) -> Self {
        Certifier {
            engine,
            config,
            vanishing: DashMap::new(),
        }
    }

    pub fn engine(&self) -> &CharacterEngine {
        self.engine
    }

    pub fn config(&self) -> &CertifyConfig {
        &self.config
    }

    /// First certificate in rule order, or `None`.
    pub fn certify(&self, alpha: &Partition, beta: &Partition) -> Result<Option<Certificate>> {
        check_sizes(alpha, beta)?;
        if let Some(cert) = self_conjugate_rules(alpha, beta)? {
            return Ok(Some(cert));
        }
        if let Some(cert) = certify_nonzero(alpha, beta)? {
            return Ok(Some(cert));
        }
        if let Some(cert) = certify_zero_hook_chain(alpha, beta)? {
            return Ok(Some(cert));
        }
        let splits = beta.len().saturating_sub(1).min(self.config.max_split);
        for s in 1..=splits {
            for p in primes_up_to(alpha.size() as u64) {
                if let Some(cert) = self.certify_zero_process(alpha, beta, s, p)? {
                    return Ok(Some(cert));
                }
            }
        }
        if let Some(cert) = self.certify_one_step_family(alpha, beta)? {
            return Ok(Some(cert));
        }
        if let Some(cert) = self.certify_two_step_family(alpha, beta)? {
            return Ok(Some(cert));
        }
        if self.config.fallback_exact {
            let value = self.engine.value(alpha, beta)?;
            return Ok(Some(Certificate {
                verdict: if value.is_zero() {
                    Verdict::Zero
                } else {
                    Verdict::Nonzero
                },
                rule: Rule::ExactMN,
                witness: Witness::Exact {
                    value: value.to_string(),
                },
            }));
        }
        Ok(None)
    }
}

/// The three shortcuts for self-conjugate characters, in order: odd class,
/// class part in the gap set, even part larger than `n/2`.
pub fn self_conjugate_rules(alpha: &Partition, beta: &Partition) -> Result<Option<Certificate>> {
    check_sizes(alpha, beta)?;
    if !alpha.is_self_conjugate() {
        return Ok(None);
    }
    if beta.parity() == Parity::Odd {
        return Ok(Some(Certificate {
            verdict: Verdict::Zero,
            rule: Rule::SelfConjOdd,
            witness: Witness::OddClass {
                parity: Parity::Odd,
            },
        }));
    }
    let shape = SelfConjugateShape::new(alpha)?;
    if let Some(cert) = gap_interval_rule(&shape, beta) {
        return Ok(Some(cert));
    }
    gaps::self_conj_even_big_part(&shape, beta)
}

/// Zero when some part of `β` is not a hook length of the self-conjugate
/// `α`, read off the interval form of the gap set.
pub fn gap_interval_rule(shape: &SelfConjugateShape, beta: &Partition) -> Option<Certificate> {
    let gaps = shape.gap_set();
    for &part in beta.multiplicity_form().values().collect::<Vec<_>>().iter() {
        if let Some(run) = gaps.run_containing(part as i64) {
            let ladder = shape.ladder_containing(part as i64).map(|l| LadderRef {
                v: l.v,
                dir: l.direction,
            });
            return Some(Certificate {
                verdict: Verdict::Zero,
                rule: Rule::GapInterval,
                witness: Witness::Gap {
                    part,
                    interval: run,
                    ladder,
                },
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    fn p(text: &str) -> Partition {
        parse_partition(text).unwrap()
    }

    #[test]
    fn precedence_prefers_gap_interval() {
        let engine = CharacterEngine::new();
        let certifier = Certifier::new(&engine);
        let cert = certifier.certify(&p("3,2,1"), &p("4,2")).unwrap().unwrap();
        assert_eq!(cert.rule, Rule::GapInterval);
        assert_eq!(cert.verdict, Verdict::Zero);
        let cert = certifier
            .certify(&p("3,2,1"), &p("2,1^4"))
            .unwrap()
            .unwrap();
        assert_eq!(cert.rule, Rule::SelfConjOdd);
    }

    #[test]
    fn fallback_exact() {
        let engine = CharacterEngine::new();
        let plain = Certifier::new(&engine);
        assert_eq!(plain.certify(&p("2,2"), &p("1^4")).unwrap(), None);
        let exact = Certifier::with_config(
            &engine,
            CertifyConfig {
                fallback_exact: true,
                ..CertifyConfig::default()
            },
        );
        let cert = exact.certify(&p("2,2"), &p("1^4")).unwrap().unwrap();
        assert_eq!(cert.rule, Rule::ExactMN);
        assert_eq!(cert.witness, Witness::Exact { value: "2".into() });
    }

    #[test]
    fn record_json_schema() {
        let alpha = p("2,1^6");
        let beta = p("5,3");
        let cert = certify_nonzero(&alpha, &beta).unwrap();
        let mut record = CertificateRecord::new(&alpha, &beta, cert.as_ref());
        record.verified_by_mn = Some(true);
        let doc: serde_json::Value = serde_json::from_str(&record.to_json()).unwrap();
        assert_eq!(doc["alpha"], "2,1^6");
        assert_eq!(doc["beta"], "5,3");
        assert_eq!(doc["verdict"], "Nonzero");
        assert_eq!(doc["rule"], "FrobeniusDegree");
        assert_eq!(doc["witness"]["frobenius_number"], 7);
        assert_eq!(doc["verified_by_mn"], true);

        let empty = CertificateRecord::new(&p("2,2"), &p("1^4"), None);
        let doc: serde_json::Value = serde_json::from_str(&empty.to_json()).unwrap();
        assert!(doc["verdict"].is_null() && doc["rule"].is_null());
    }

    #[test]
    fn size_mismatch() {
        let engine = CharacterEngine::new();
        assert!(Certifier::new(&engine).certify(&p("3"), &p("2")).is_err());
    }
}
