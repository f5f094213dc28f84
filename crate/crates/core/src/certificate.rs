//! Certificates: for every `m` in a range, a decomposition of 1 containing
//! `m` within a term budget, stored as one JSON document.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decompose::{anchored_unit, AnchoredOutcome};
use crate::error::{domain, Error, Result};

pub const TOOL_VERSION: &str = concat!("unitfrac ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub m: u64,
    /// Decimal strings, strictly increasing.
    pub denominators: Vec<String>,
    pub terms: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub range_from: u64,
    pub range_to: u64,
    pub budget: usize,
    pub entries: Vec<CertificateEntry>,
    pub tool_version: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    Complete(Certificate),
    /// Every anchor that could not be placed, with the reason.
    Failed { unsat: Vec<(u64, String)> },
}

/// Runs the anchored pipeline for every `m` in `from..=to` on `jobs` workers.
pub fn certify(from: u64, to: u64, budget: usize, jobs: usize) -> Result<CertifyOutcome> {
    if from < 2 || from > to {
        return domain(format!("range {from}..={to} must satisfy 2 <= from <= to"));
    }
    if budget < 3 {
        return domain(format!("budget {budget} must be at least 3"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("worker pool: {e}")))?;
    let results: Vec<Result<AnchoredOutcome>> =
        pool.install(|| (from..=to).into_par_iter().map(|m| anchored_unit(m, budget)).collect());

    let mut entries = Vec::new();
    let mut unsat = Vec::new();
    for r in results {
        match r? {
            AnchoredOutcome::Found(a) => {
                let report = a.decomposition.verify();
                let denominators: Vec<String> =
                    a.decomposition.denominators().iter().map(ToString::to_string).collect();
                entries.push(CertificateEntry {
                    m: a.anchor_m,
                    terms: denominators.len(),
                    denominators,
                    verified: report.valid,
                });
            }
            AnchoredOutcome::Unsat { anchor_m, reason } => unsat.push((anchor_m, reason)),
        }
    }
    if !unsat.is_empty() {
        return Ok(CertifyOutcome::Failed { unsat });
    }
    Ok(CertifyOutcome::Complete(Certificate {
        range_from: from,
        range_to: to,
        budget,
        entries,
        tool_version: TOOL_VERSION.to_string(),
    }))
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }
}

/// Re-checks a certificate from its stored strings alone. The reciprocal
/// sums are accumulated term by term in `BigRational`, a different route
/// from the common-denominator sum used when the certificate was built.
/// Returns every problem found; an empty list means the certificate holds.
pub fn check_certificate(cert: &Certificate) -> Vec<String> {
    let mut problems = Vec::new();
    if cert.range_from < 2 || cert.range_from > cert.range_to {
        problems.push(format!("bad range {}..={}", cert.range_from, cert.range_to));
        return problems;
    }
    let expected = cert.range_to - cert.range_from + 1;
    if cert.entries.len() as u64 != expected {
        problems.push(format!("{} entries for a range of {expected}", cert.entries.len()));
    }
    for (i, e) in cert.entries.iter().enumerate() {
        let want_m = cert.range_from + i as u64;
        if e.m != want_m {
            problems.push(format!("entry {i} is for m = {}, expected {want_m}", e.m));
        }
        if let Err(p) = check_entry(e, cert.budget) {
            problems.push(format!("m = {}: {p}", e.m));
        }
    }
    problems
}

fn check_entry(e: &CertificateEntry, budget: usize) -> std::result::Result<(), String> {
    if !e.verified {
        return Err("entry not marked verified".into());
    }
    if e.terms != e.denominators.len() {
        return Err(format!("terms = {} but {} denominators", e.terms, e.denominators.len()));
    }
    if e.terms > budget {
        return Err(format!("{} terms exceed budget {budget}", e.terms));
    }
    let mut prev: Option<BigUint> = None;
    let mut sum = BigRational::zero();
    let mut has_m = false;
    for s in &e.denominators {
        let n = BigUint::from_str(s).map_err(|_| format!("{s:?} is not a positive decimal integer"))?;
        if n.is_zero() {
            return Err("zero denominator".into());
        }
        if prev.as_ref().is_some_and(|p| p >= &n) {
            return Err(format!("denominators not strictly increasing at {n}"));
        }
        has_m |= n == BigUint::from(e.m);
        sum += BigRational::new(BigInt::one(), BigInt::from(n.clone()));
        prev = Some(n);
    }
    if !has_m {
        return Err("anchor missing from denominators".into());
    }
    if !sum.is_one() {
        return Err(format!("reciprocals sum to {sum}, not 1"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry_certificate() {
        let CertifyOutcome::Complete(c) = certify(2, 2, 41, 1).unwrap() else {
            panic!("m = 2 should certify");
        };
        assert_eq!(c.entries.len(), 1);
        assert_eq!(c.entries[0].denominators, ["2", "3", "6"]);
        assert!(check_certificate(&c).is_empty());
        let json = c.to_json();
        let keys: Vec<usize> = ["range_from", "range_to", "budget", "entries", "tool_version"]
            .iter()
            .map(|k| json.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Certificate::from_json(&json).unwrap(), c);
    }

    #[test]
    fn unsat_anchor_fails_the_run() {
        match certify(4, 4, 3, 1).unwrap() {
            CertifyOutcome::Failed { unsat } => assert_eq!(unsat[0].0, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(certify(1, 4, 41, 1).is_err());
        assert!(certify(5, 4, 41, 1).is_err());
        assert!(certify(2, 4, 2, 1).is_err());
    }

    #[test]
    fn checker_catches_tampering() {
        let CertifyOutcome::Complete(c) = certify(2, 6, 41, 2).unwrap() else {
            panic!()
        };
        assert!(check_certificate(&c).is_empty());

        let mut bad = c.clone();
        bad.entries[1].denominators[0] = "5".into();
        assert_eq!(check_certificate(&bad).len(), 1);

        let mut bad = c.clone();
        bad.entries.pop();
        assert!(!check_certificate(&bad).is_empty());

        let mut bad = c.clone();
        bad.budget = 2;
        assert!(!check_certificate(&bad).is_empty());

        let mut bad = c;
        bad.entries[0].denominators.swap(0, 1);
        assert!(!check_certificate(&bad).is_empty());
    }
}
