//! p-vanishing classes: classes where every character of degree divisible
//! by `p` takes the value zero.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::require_prime;
use crate::character::{degree, CharacterEngine};
use crate::error::{Error, Result};
use crate::padic::is_p_adic_type;
use crate::partition::{partitions_of, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingEntry {
    pub beta: Partition,
    pub p_adic: bool,
}

/// Every p-vanishing class of `S_n`, in the canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub p: u64,
    pub vanishing: Vec<VanishingEntry>,
    /// Number of characters of degree divisible by `p`. When this is zero
    /// every class vanishes vacuously.
    pub singular_characters: usize,
    /// p-adic-type classes that were not found p-vanishing. Always empty
    /// unless the engine is broken.
    #[serde(rename = "thm21_violations")]
    pub padic_violations: Vec<Partition>,
}

impl ScanReport {
    /// Vanishing classes that are of p-adic type.
    pub fn confirmations(&self) -> impl Iterator<Item = &Partition> {
        self.vanishing.iter().filter(|e| e.p_adic).map(|e| &e.beta)
    }

    /// Vanishing classes that are not of p-adic type.
    pub fn exceptions(&self) -> impl Iterator<Item = &Partition> {
        self.vanishing.iter().filter(|e| !e.p_adic).map(|e| &e.beta)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("scan report serializes")
    }
}

/// Characters of `S_n` whose degree is divisible by `p`.
fn singular_characters(n: usize, p: u64) -> Vec<Partition> {
    let p = BigInt::from(p);
    partitions_of(n)
        .filter(|alpha| (degree(alpha) % &p).is_zero())
        .collect()
}

impl CharacterEngine {
    /// Brute force: every character of `S_{|β|}` with degree divisible by
    /// `p` vanishes at `β`.
    pub fn is_p_vanishing_class(&self, p: u64, beta: &Partition) -> Result<bool> {
        require_prime(p)?;
        let singular = singular_characters(beta.size(), p);
        Ok(self.vanishes_on(&singular, beta))
    }

    fn vanishes_on(&self, characters: &[Partition], beta: &Partition) -> bool {
        characters
            .iter()
            .all(|alpha| self.eval(alpha, beta.parts()).is_zero())
    }

    /// Classifies every class of `S_n`, sharded across the rayon pool.
    pub fn scan_p_vanishing(&self, n: usize, p: u64) -> Result<ScanReport> {
        require_prime(p)?;
        let singular = singular_characters(n, p);
        let classes: Vec<Partition> = partitions_of(n).collect();
        let verdicts: Vec<(bool, bool)> = classes
            .par_iter()
            .map(|beta| {
                let p_adic = is_p_adic_type(beta, p).expect("p checked prime");
                (self.vanishes_on(&singular, beta), p_adic)
            })
            .collect();
        let mut vanishing = Vec::new();
        let mut padic_violations = Vec::new();
        for (beta, (vanishes, p_adic)) in classes.into_iter().zip(verdicts) {
            if p_adic && !vanishes {
                padic_violations.push(beta.clone());
            }
            if vanishes {
                vanishing.push(VanishingEntry { beta, p_adic });
            }
        }
        Ok(ScanReport {
            n,
            p,
            vanishing,
            singular_characters: singular.len(),
            padic_violations,
        })
    }
}

/// [`CharacterEngine::is_p_vanishing_class`] with a fresh engine, checking
/// that `β ⊢ n`.
pub fn is_p_vanishing_class(n: usize, p: u64, beta: &Partition) -> Result<bool> {
    if beta.size() != n {
        return Err(Error::domain(format!(
            "class {beta} is not a partition of {n}"
        )));
    }
    CharacterEngine::new().is_p_vanishing_class(p, beta)
}

pub fn scan_p_vanishing(n: usize, p: u64) -> Result<ScanReport> {
    CharacterEngine::new().scan_p_vanishing(n, p)
}
