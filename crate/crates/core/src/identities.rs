//! Splitting identities, perfect partitions and the telescoping gadget.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::fraction::{sum_of_reciprocals, Fraction};

/// The fixed perfect partition used by the gadget. Every element is a
/// multiple of 3 and consecutive elements differ by a ratio of at least 10/9.
pub const GADGET_PARTITION: [u64; 13] = [3, 6, 9, 12, 15, 18, 24, 27, 30, 45, 54, 60, 72];

/// Gadgets for anchors at or below this value carry no distinctness guarantee.
pub const GADGET_SAFE_ABOVE: u64 = 432;

/// `1/source = 1/first + 1/second`, with `first < second` for every source
/// above 1. The basic split of 1 is `1/2 + 1/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPair {
    #[serde(with = "crate::decimal")]
    pub source: BigUint,
    #[serde(with = "crate::decimal")]
    pub first: BigUint,
    #[serde(with = "crate::decimal")]
    pub second: BigUint,
}

impl SplitPair {
    /// The exact identity, ignoring ordering.
    pub fn holds(&self) -> bool {
        Fraction::unit(&self.source).ok()
            == sum_of_reciprocals(&[self.first.clone(), self.second.clone()]).ok()
    }

    pub fn is_ordered(&self) -> bool {
        self.first < self.second
    }
}

/// `1/n = 1/(n+1) + 1/(n(n+1))`.
pub fn split_basic(n: &BigUint) -> Result<SplitPair> {
    if n.is_zero() {
        return domain("split_basic needs n >= 1");
    }
    let first = n + 1u32;
    let second = n * &first;
    Ok(SplitPair {
        source: n.clone(),
        first,
        second,
    })
}

/// For `n = ab` with `a, b ≥ 2`: `1/n = 1/(n+a) + 1/(b(n+a))`.
///
/// With `a = 1` the same formula would give the basic split; that case is
/// rejected here and belongs to [`split_basic`].
pub fn split_composite(n: &BigUint, a: &BigUint) -> Result<SplitPair> {
    let two = BigUint::from(2u32);
    if a < &two || a.is_zero() || !(n % a).is_zero() || &(a * 2u32) > n {
        return domain(format!("{a} is not a divisor of {n} in [2, {n}/2]"));
    }
    let b = n / a;
    let first = n + a;
    let second = &b * &first;
    Ok(SplitPair {
        source: n.clone(),
        first,
        second,
    })
}

/// A set of distinct positive integers whose reciprocals sum to 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectPartition {
    elements: Vec<u64>,
}

impl PerfectPartition {
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        elements.sort_unstable();
        let report = check_perfect_partition(&elements)?;
        if !report.sum_is_one {
            return domain(format!("reciprocals of {elements:?} sum to {}", report.sum));
        }
        Ok(PerfectPartition { elements })
    }

    /// The gadget's partition.
    pub fn gadget() -> Self {
        PerfectPartition {
            elements: GADGET_PARTITION.to_vec(),
        }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub sum_is_one: bool,
    pub all_divisible_by_3: bool,
    /// Smallest `d/d'` over pairs `d > d'`; `None` for a single element.
    pub min_pairwise_ratio: Option<Fraction>,
    pub sum: Fraction,
}

pub fn check_perfect_partition(candidate: &[u64]) -> Result<PartitionReport> {
    if candidate.is_empty() {
        return domain("empty partition candidate");
    }
    if candidate.contains(&0) {
        return domain("partition candidate contains 0");
    }
    let mut sorted = candidate.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return domain(format!("partition candidate {candidate:?} has duplicates"));
    }
    let big: Vec<BigUint> = sorted.iter().map(|&d| BigUint::from(d)).collect();
    let sum = sum_of_reciprocals(&big)?;
    // For sorted positive values the minimum ratio is between neighbours.
    let min_pairwise_ratio = sorted
        .windows(2)
        .map(|w| Fraction::new(w[1], w[0]).expect("nonzero"))
        .min();
    Ok(PartitionReport {
        sum_is_one: sum == Fraction::one(),
        all_divisible_by_3: sorted.iter().all(|d| d % 3 == 0),
        min_pairwise_ratio,
        sum,
    })
}

/// The terms `{m+t} ∪ {d(m+i)(m+i+1) : d ∈ D, 0 ≤ i < t}`, whose reciprocals
/// sum to `1/m`. `t ∈ {1,2,3}` is chosen so that `3 | m+t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TelescopeGadget {
    pub anchor_m: u64,
    pub offset_t: u8,
    pub partition: PerfectPartition,
    /// `m+t` first, then the products with `i` outer and `d` inner.
    #[serde(with = "crate::decimal::vec")]
    pub terms: Vec<BigUint>,
}

/// The unique `t ∈ {1,2,3}` with `3 | m+t`.
pub fn gadget_offset(m: u64) -> u8 {
    match m % 3 {
        0 => 3,
        1 => 2,
        _ => 1,
    }
}

pub fn telescope_gadget(m: u64) -> Result<TelescopeGadget> {
    if m < 2 {
        return domain(format!("gadget anchor {m} must be at least 2"));
    }
    let t = gadget_offset(m);
    let partition = PerfectPartition::gadget();
    let big_m = BigUint::from(m);
    let mut terms = Vec::with_capacity(1 + usize::from(t) * partition.len());
    terms.push(&big_m + t);
    for i in 0..u64::from(t) {
        let lo = &big_m + i;
        let step = &lo * (&lo + 1u32);
        for &d in partition.elements() {
            terms.push(&step * d);
        }
    }
    Ok(TelescopeGadget {
        anchor_m: m,
        offset_t: t,
        partition,
        terms,
    })
}

impl TelescopeGadget {
    pub fn sum(&self) -> Fraction {
        sum_of_reciprocals(&self.terms).expect("gadget terms are positive")
    }

    /// Whether the anchor is large enough for the distinctness argument.
    pub fn in_proven_regime(&self) -> bool {
        self.anchor_m > GADGET_SAFE_ABOVE
    }

    pub fn is_distinct(&self) -> bool {
        let mut sorted = self.terms.clone();
        sorted.sort_unstable();
        sorted.windows(2).all(|w| w[0] != w[1])
    }

    /// Terms with their `(d, i)` labels; the head term `m+t` has none.
    pub fn labelled_products(&self) -> impl Iterator<Item = (u64, u64, &BigUint)> + '_ {
        let per = self.partition.len();
        self.terms[1..].iter().enumerate().map(move |(idx, x)| {
            let i = (idx / per) as u64;
            (self.partition.elements()[idx % per], i, x)
        })
    }

    pub fn audit(&self) -> GadgetAudit {
        let m = BigUint::from(self.anchor_m);
        let head = &self.terms[0];
        let max_gcd_shifted = self
            .labelled_products()
            .filter(|&(_, i, _)| i >= 1)
            .map(|(_, _, x)| m.gcd(x))
            .max()
            .unwrap_or_else(BigUint::one);
        GadgetAudit {
            sum_is_reciprocal: self.sum() == Fraction::new(1u32, self.anchor_m).expect("m >= 2"),
            distinct: self.is_distinct(),
            head_is_smallest: self.terms[1..].iter().all(|x| x > head),
            all_divisible_by_3: self.terms.iter().all(|x| (x % 3u32).is_zero()),
            max_gcd_shifted,
            in_proven_regime: self.in_proven_regime(),
        }
    }
}

/// The facts the distinctness argument relies on, computed directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetAudit {
    pub sum_is_reciprocal: bool,
    pub distinct: bool,
    pub head_is_smallest: bool,
    pub all_divisible_by_3: bool,
    /// Largest `gcd(m, d(m+i)(m+i+1))` over `i ≥ 1`; 1 when `t = 1`.
    #[serde(with = "crate::decimal")]
    pub max_gcd_shifted: BigUint,
    pub in_proven_regime: bool,
}
