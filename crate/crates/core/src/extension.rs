//! Maps from `S_k` into `S_{k+1}`.
//!
//! [`inject`] splits the largest denominator and is injective, so
//! `F(k) ≤ F(k+1)`. [`extend_with_anchor`] keeps a chosen denominator in the
//! longer tuple, which gives `D_k ⊆ D_{k+1}`.

use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::{is_composite, is_prime, smallest_prime_factor};
use crate::error::{domain, Error, Result};
use crate::fraction::{fmt_denoms, Decomposition, Fraction};
use crate::identities::{split_basic, split_composite, SplitPair};

/// Which case of the construction produced an extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionBranch {
    /// The anchor is not the largest term: split the largest.
    AnchorNotLast,
    /// The anchor is largest and not a split product of `n_{k-1}`: split `n_{k-1}`.
    LastSimple,
    /// `n_{k-1}` composite: split it as `ab`.
    LastCompositeSplit,
    /// `n_{k-1}` prime, `n_{k-2} + 1 ≠ n_{k-1}`: split `n_{k-2}`.
    LastPrimeShiftPrev,
    /// `n_{k-1}` prime, `n_{k-2} + 1 = n_{k-1}`: split `n_{k-2}` as `ab`.
    LastPrimePrevConsecutive,
    /// Three-term input, answered from the known four-term witnesses.
    SmallKTable,
}

impl ExtensionBranch {
    pub const ALL: [ExtensionBranch; 6] = [
        ExtensionBranch::AnchorNotLast,
        ExtensionBranch::LastSimple,
        ExtensionBranch::LastCompositeSplit,
        ExtensionBranch::LastPrimeShiftPrev,
        ExtensionBranch::LastPrimePrevConsecutive,
        ExtensionBranch::SmallKTable,
    ];
}

impl fmt::Display for ExtensionBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExtensionBranch::AnchorNotLast => "anchor_not_last",
            ExtensionBranch::LastSimple => "last_simple",
            ExtensionBranch::LastCompositeSplit => "last_composite_split",
            ExtensionBranch::LastPrimeShiftPrev => "last_prime_shift_prev",
            ExtensionBranch::LastPrimePrevConsecutive => "last_prime_prev_consecutive",
            ExtensionBranch::SmallKTable => "small_k_table",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTrace {
    pub branch: ExtensionBranch,
    pub input: Decomposition,
    pub anchor: BigUint,
    pub output: Decomposition,
}

/// Four-term decompositions covering `D_3 = {2, 3, 6}`.
const SMALL_K_WITNESSES: [[u32; 4]; 2] = [[2, 3, 7, 42], [2, 4, 6, 12]];

fn check_input(tuple: &Decomposition) -> Result<()> {
    if tuple.target() != &Fraction::one() {
        return domain(format!("extension needs a decomposition of 1, got target {}", tuple.target()));
    }
    if tuple.len() < 3 {
        return domain(format!("extension needs at least 3 terms, got {}", tuple.len()));
    }
    Ok(())
}

/// `(n₁, …, n_{k-1}, n_k + 1, n_k(n_k + 1))`.
pub fn inject(tuple: &Decomposition) -> Result<Decomposition> {
    check_input(tuple)?;
    let d = tuple.denominators();
    let (last, rest) = d.split_last().expect("len >= 3");
    let s = split_basic(last)?;
    let mut out = rest.to_vec();
    out.push(s.first);
    out.push(s.second);
    Decomposition::new(Fraction::one(), out)
}

/// Replaces `d[idx]` by the two halves of `split` and re-sorts.
fn replace_with(d: &[BigUint], idx: usize, split: SplitPair) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = d
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != idx)
        .map(|(_, n)| n.clone())
        .collect();
    out.push(split.first);
    out.push(split.second);
    out.sort_unstable();
    out
}

fn composite_split(n: &BigUint) -> Result<SplitPair> {
    let a = smallest_prime_factor(n).ok_or_else(|| Error::Internal(format!("{n} has no prime factor")))?;
    split_composite(n, &a)
}

/// A `(k+1)`-term decomposition of 1 that still contains `anchor`.
///
/// The cases are tried in order: a three-term input with the anchor last is
/// answered from a table; otherwise the largest term is split if it is not
/// the anchor; otherwise `n_{k-1}` is split (basic split when that cannot
/// reproduce the anchor, composite split when `n_{k-1}` factors); a prime
/// `n_{k-1}` forces `n_k = n_{k-1}(n_{k-1}+1)`, and then `n_{k-2}` is split.
pub fn extend_with_anchor(tuple: &Decomposition, anchor: &BigUint) -> Result<ExtensionTrace> {
    check_input(tuple)?;
    extend_any(tuple, anchor)
}

/// The same construction for a decomposition of any target; the output has
/// the input's target. Every split preserves the sum, so only the table case
/// depends on the target being 1.
///
/// For targets of 1 the two prime cases cannot occur: a prime `n_{k-1} = p`
/// divides only `n_{k-1}` and `n_k`, and `1/p + 1/(p(p+1))` keeps `p` in the
/// reduced denominator. They are reachable here with other targets.
pub fn extend_any(tuple: &Decomposition, anchor: &BigUint) -> Result<ExtensionTrace> {
    if tuple.len() < 3 {
        return domain(format!("extension needs at least 3 terms, got {}", tuple.len()));
    }
    if !tuple.contains(anchor) {
        return domain(format!("anchor {anchor} is not in {}", fmt_denoms(tuple.denominators())));
    }
    let d = tuple.denominators();
    let k = d.len();
    let last = &d[k - 1];

    let (branch, candidate) = if anchor != last {
        let s = split_basic(last)?;
        (ExtensionBranch::AnchorNotLast, replace_with(d, k - 1, s))
    } else if k == 3 && tuple.target() == &Fraction::one() {
        let w = SMALL_K_WITNESSES
            .iter()
            .map(|w| w.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>())
            .find(|w| w.contains(anchor))
            .ok_or_else(|| Error::Internal(format!("no four-term witness contains {anchor}")))?;
        (ExtensionBranch::SmallKTable, w)
    } else {
        let prev = &d[k - 2];
        // n_{k-1} = 1 only occurs for targets above 1; nothing to split.
        if prev < &BigUint::from(2u32) {
            return domain("n_(k-1) must be at least 2");
        }
        let basic_prev = split_basic(prev)?;
        if anchor != &basic_prev.first && anchor != &basic_prev.second {
            (ExtensionBranch::LastSimple, replace_with(d, k - 2, basic_prev))
        } else if is_composite(prev) {
            (ExtensionBranch::LastCompositeSplit, replace_with(d, k - 2, composite_split(prev)?))
        } else {
            if !is_prime(prev) {
                return Err(Error::Internal(format!("n_(k-1) = {prev} is neither prime nor composite")));
            }
            if last != &basic_prev.second {
                return Err(Error::Internal(format!(
                    "n_(k-1) = {prev} is prime but n_k = {last} is not {}; input cannot sum to 1",
                    basic_prev.second
                )));
            }
            let prev2 = &d[k - 3];
            if prev != &(prev2 + 1u32) {
                (ExtensionBranch::LastPrimeShiftPrev, replace_with(d, k - 3, split_basic(prev2)?))
            } else if is_composite(prev2) {
                (
                    ExtensionBranch::LastPrimePrevConsecutive,
                    replace_with(d, k - 3, composite_split(prev2)?),
                )
            } else {
                return Err(Error::Internal(format!(
                    "n_(k-2) = {prev2} should be composite when n_(k-1) = {prev} is a prime successor"
                )));
            }
        }
    };

    let output = Decomposition::new(tuple.target().clone(), candidate).map_err(|e| {
        Error::Internal(format!("branch {branch} produced an invalid tuple: {e}"))
    })?;
    if output.len() != k + 1 || !output.contains(anchor) {
        return Err(Error::Internal(format!("branch {branch} lost the anchor {anchor}")));
    }
    Ok(ExtensionTrace {
        branch,
        input: tuple.clone(),
        anchor: anchor.clone(),
        output,
    })
}
