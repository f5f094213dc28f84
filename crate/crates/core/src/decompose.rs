//! Decompositions of arbitrary fractions into distinct unit fractions, and
//! the anchored pipeline that builds a decomposition of 1 containing a
//! required denominator.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::enumeration;
use crate::error::{domain, Error, Result};
use crate::fraction::{fmt_denoms, Decomposition, Fraction};
use crate::identities::{split_basic, telescope_gadget};

/// Largest term count [`shortest`] searches unless configured otherwise.
pub const DEFAULT_SHORTEST_CEILING: usize = 5;
/// Collision repairs the anchored pipeline attempts before giving up.
pub const DEFAULT_RETRY_BOUND: usize = 8;

pub type Exclusions = BTreeSet<BigUint>;

/// Greedy expansion: repeatedly take the least admissible denominator
/// `n ≥ ⌈1/r⌉`, larger than the previous one and not excluded.
///
/// An excluded choice is passed over for `n + 1`, which still fits.
pub fn greedy(fraction: &Fraction, excluded: &Exclusions) -> Result<Decomposition> {
    let Some((mut p, mut q)) = fraction.to_biguint_parts() else {
        return domain(format!("greedy needs 0 < {fraction} <= 1"));
    };
    if p.is_zero() || p > q {
        return domain(format!("greedy needs 0 < {fraction} <= 1"));
    }
    let mut out: Vec<BigUint> = Vec::new();
    while !p.is_zero() {
        let mut n = Integer::div_ceil(&q, &p);
        if let Some(prev) = out.last() {
            n = n.max(prev + 1u32);
        }
        while excluded.contains(&n) {
            n += 1u32;
        }
        // r − 1/n = (pn − q)/(qn)
        let np = &p * &n - &q;
        let nq = &q * &n;
        let g = np.gcd(&nq);
        p = np / &g;
        q = nq / &g;
        out.push(n);
    }
    Decomposition::new(fraction.clone(), out)
}

/// A minimum-length witness, certified by exhausting all shorter lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestResult {
    pub fraction: Fraction,
    pub min_terms: usize,
    pub witness: Decomposition,
}

/// Fewest distinct unit fractions (denominators above 1, none excluded)
/// summing to `fraction`, searching lengths `1..=max_terms` in turn. The
/// witness is the lexicographically first one of minimum length. `None`
/// means no decomposition within `max_terms` exists.
pub fn shortest(fraction: &Fraction, max_terms: usize, excluded: &Exclusions) -> Result<Option<ShortestResult>> {
    shortest_with_ceiling(fraction, max_terms, excluded, DEFAULT_SHORTEST_CEILING)
}

pub fn shortest_with_ceiling(
    fraction: &Fraction,
    max_terms: usize,
    excluded: &Exclusions,
    ceiling: usize,
) -> Result<Option<ShortestResult>> {
    if max_terms > ceiling {
        return Err(Error::ResourceLimit {
            what: format!("max_terms = {max_terms}"),
            ceiling,
        });
    }
    if !fraction.is_positive() || fraction >= &Fraction::one() {
        return domain(format!("shortest needs 0 < {fraction} < 1"));
    }
    let two = BigUint::from(2u32);
    for len in 1..=max_terms {
        let mut found = None;
        enumeration::search(fraction, len, &two, excluded, |t| {
            found = Some(t.to_vec());
            ControlFlow::Break(())
        })?;
        if let Some(w) = found {
            return Ok(Some(ShortestResult {
                fraction: fraction.clone(),
                min_terms: len,
                witness: Decomposition::new(fraction.clone(), w)?,
            }));
        }
    }
    Ok(None)
}

/// Produces the base decomposition of `(m−1)/m` for the anchored pipeline.
pub trait BaseDecomposer {
    fn decompose(&self, target: &Fraction, anchor: &BigUint) -> Result<Decomposition>;

    fn name(&self) -> String;
}

/// [`shortest`] up to `max_terms`, falling back to [`greedy`].
#[derive(Debug, Clone)]
pub struct ShortestThenGreedy {
    pub max_terms: usize,
    /// Keep the anchor out of the base, so the gadget is never needed.
    pub exclude_anchor: bool,
}

impl Default for ShortestThenGreedy {
    fn default() -> Self {
        ShortestThenGreedy {
            max_terms: 4,
            exclude_anchor: true,
        }
    }
}

impl BaseDecomposer for ShortestThenGreedy {
    fn decompose(&self, target: &Fraction, anchor: &BigUint) -> Result<Decomposition> {
        let ex = exclusions(anchor, self.exclude_anchor);
        let ceiling = self.max_terms.max(DEFAULT_SHORTEST_CEILING);
        match shortest_with_ceiling(target, self.max_terms, &ex, ceiling)? {
            Some(r) => Ok(r.witness),
            None => greedy(target, &exclusions(anchor, true)),
        }
    }

    fn name(&self) -> String {
        format!("shortest<={}+greedy", self.max_terms)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Greedy {
    pub exclude_anchor: bool,
}

impl BaseDecomposer for Greedy {
    fn decompose(&self, target: &Fraction, anchor: &BigUint) -> Result<Decomposition> {
        greedy(target, &exclusions(anchor, self.exclude_anchor))
    }

    fn name(&self) -> String {
        "greedy".into()
    }
}

fn exclusions(anchor: &BigUint, on: bool) -> Exclusions {
    let mut ex = Exclusions::new();
    if on {
        ex.insert(anchor.clone());
    }
    ex
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredResult {
    pub anchor_m: u64,
    pub decomposition: Decomposition,
    pub used_gadget: bool,
    pub retries: usize,
    /// Terms in the base decomposition of `(m−1)/m`.
    pub base_terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnchoredOutcome {
    Found(AnchoredResult),
    Unsat { anchor_m: u64, reason: String },
}

impl AnchoredOutcome {
    pub fn found(self) -> Option<AnchoredResult> {
        match self {
            AnchoredOutcome::Found(r) => Some(r),
            AnchoredOutcome::Unsat { .. } => None,
        }
    }
}

/// A decomposition of 1 containing `m` with at most `budget` terms, using the
/// default base decomposer.
pub fn anchored_unit(m: u64, budget: usize) -> Result<AnchoredOutcome> {
    anchored_unit_with(m, budget, &ShortestThenGreedy::default(), DEFAULT_RETRY_BOUND)
}

/// Decomposes `(m−1)/m` as `E`. If `m ∉ E` the answer is `E ∪ {m}`;
/// otherwise `1/m` is expanded a second time through the telescoping gadget
/// and collisions between `E` and the gadget terms are repaired by splitting
/// the colliding member of `E`.
pub fn anchored_unit_with(
    m: u64,
    budget: usize,
    base: &dyn BaseDecomposer,
    retry_bound: usize,
) -> Result<AnchoredOutcome> {
    if budget < 3 {
        return domain(format!("budget {budget} must be at least 3"));
    }
    if m < 2 {
        return domain(format!("anchor {m} must be at least 2"));
    }
    let anchor = BigUint::from(m);
    let target = Fraction::new(m - 1, m)?;
    let e = base.decompose(&target, &anchor)?;
    if e.target() != &target {
        return Err(Error::Internal(format!("{} returned a decomposition of {}", base.name(), e.target())));
    }
    let base_terms = e.len();
    let unsat = |reason: String| Ok(AnchoredOutcome::Unsat { anchor_m: m, reason });

    if !e.contains(&anchor) {
        if base_terms + 1 > budget {
            return unsat(format!("{} terms exceed budget {budget}", base_terms + 1));
        }
        let mut d = e.into_denominators();
        d.push(anchor);
        let decomposition = Decomposition::from_unsorted(Fraction::one(), d)
            .map_err(|e| Error::Internal(format!("anchored output failed verification: {e}")))?;
        return Ok(AnchoredOutcome::Found(AnchoredResult {
            anchor_m: m,
            decomposition,
            used_gadget: false,
            retries: 0,
            base_terms,
        }));
    }

    let gadget = telescope_gadget(m)?;
    let mut sorted_gadget = gadget.terms.clone();
    sorted_gadget.sort_unstable();
    if let Some(w) = sorted_gadget.windows(2).find(|w| w[0] == w[1]) {
        return unsat(format!("gadget terms for m = {m} repeat {}", w[0]));
    }
    let mut members = e.into_denominators();
    let mut retries = 0;
    loop {
        let mut all: Vec<&BigUint> = members.iter().chain(gadget.terms.iter()).collect();
        all.sort_unstable();
        let Some(clash) = all.windows(2).find(|w| w[0] == w[1]).map(|w| w[0].clone()) else {
            break;
        };
        if clash == anchor {
            return unsat(format!("the anchor {m} collides with itself"));
        }
        if retries == retry_bound {
            return unsat(format!("collision at {clash} persists after {retry_bound} repairs"));
        }
        let idx = members.iter().position(|x| x == &clash).expect("gadget terms are distinct");
        let split = split_basic(&members.swap_remove(idx))?;
        members.push(split.first);
        members.push(split.second);
        retries += 1;
    }
    let total = members.len() + gadget.terms.len();
    if total > budget {
        return unsat(format!("{total} terms exceed budget {budget}"));
    }
    members.extend(gadget.terms);
    let decomposition = Decomposition::from_unsorted(Fraction::one(), members)
        .map_err(|e| Error::Internal(format!("anchored output failed verification: {e}")))?;
    if !decomposition.contains(&anchor) {
        return Err(Error::Internal(format!("anchor {m} lost in {}", fmt_denoms(decomposition.denominators()))));
    }
    Ok(AnchoredOutcome::Found(AnchoredResult {
        anchor_m: m,
        decomposition,
        used_gadget: true,
        retries,
        base_terms,
    }))
}
