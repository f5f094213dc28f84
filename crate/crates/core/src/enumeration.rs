//! Exhaustive enumeration of distinct unit fraction decompositions.
//!
//! The search is a depth-first walk over strictly increasing denominators.
//! At a node with remainder `p/q` and `ℓ` terms still to place, the next
//! denominator `n` must satisfy `n > q/p` (the term fits) and `n ≤ ℓq/p`
//! (the remaining terms can still reach the remainder). The last two terms
//! are solved directly: `1/n + 1/y = p/q` gives `y = qn/(pn − q)`.
//!
//! Nodes run on `u128` while every product at that node fits and are handed
//! to the `BigUint` path otherwise, before anything under them is emitted.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::fraction::Fraction;

/// Largest k `summarize` accepts unless configured otherwise.
pub const DEFAULT_CEILING: usize = 7;

/// The state of one search node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub remainder: Fraction,
    pub terms_left: usize,
    pub min_next_denominator: BigUint,
}

impl SearchBounds {
    /// Whether `n` may be placed next at this node.
    pub fn admits(&self, n: &BigUint) -> bool {
        if n < &self.min_next_denominator || n.is_zero() || self.terms_left == 0 {
            return false;
        }
        let Some((p, q)) = self.remainder.to_biguint_parts() else {
            return false;
        };
        if p.is_zero() {
            return false;
        }
        // 1/n vs p/q  <=>  q vs p·n
        let pn = &p * n;
        let fits = if self.terms_left == 1 { q == pn } else { q < pn };
        fits && pn <= BigUint::from(self.terms_left) * &q
    }

    /// Inclusive range of denominators that pass the weak bounds, or `None`
    /// when the node is dead.
    pub fn candidate_range(&self) -> Option<(BigUint, BigUint)> {
        let (p, q) = self.remainder.to_biguint_parts()?;
        if p.is_zero() || self.terms_left == 0 {
            return None;
        }
        let lo = if self.terms_left == 1 {
            if !p.is_one() {
                return None;
            }
            q.clone()
        } else {
            &q / &p + 1u32
        };
        let lo = lo.max(self.min_next_denominator.clone()).max(BigUint::one());
        let hi = BigUint::from(self.terms_left) * &q / &p;
        (lo <= hi).then_some((lo, hi))
    }
}

/// Exact results for one k at target 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumSummary {
    pub k: usize,
    /// `F(k) = |S_k|`.
    pub count: u64,
    /// `D_k`, sorted.
    pub denominators: Vec<BigUint>,
    /// `v(k)`, the least integer above 1 missing from `D_k`.
    pub smallest_missing: u64,
}

impl EnumSummary {
    pub fn from_solutions(k: usize, solutions: &[Vec<BigUint>]) -> Self {
        let set: BTreeSet<&BigUint> = solutions.iter().flatten().collect();
        let denominators: Vec<BigUint> = set.into_iter().cloned().collect();
        EnumSummary {
            k,
            count: solutions.len() as u64,
            smallest_missing: smallest_missing(&denominators),
            denominators,
        }
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        self.denominators.binary_search(n).is_ok()
    }
}

/// Least integer `> 1` absent from a sorted set.
pub fn smallest_missing(sorted: &[BigUint]) -> u64 {
    let mut v = 2u64;
    for n in sorted {
        match n.to_u64() {
            Some(x) if x < v => continue,
            Some(x) if x == v => v += 1,
            _ => break,
        }
    }
    v
}

#[derive(Debug, Clone)]
pub struct EnumConfig {
    pub ceiling: usize,
    /// Worker count. One means the plain sequential walk.
    pub jobs: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            ceiling: DEFAULT_CEILING,
            jobs: 1,
        }
    }
}

/// Streams every strictly increasing `k`-tuple with first entry at least
/// `min_denom` whose reciprocals sum to `target`, in lexicographic order.
/// The visitor can stop the walk early.
pub fn for_each_solution<F>(target: &Fraction, k: usize, min_denom: &BigUint, visit: F) -> Result<()>
where
    F: FnMut(&[BigUint]) -> ControlFlow<()>,
{
    search(target, k, min_denom, &BTreeSet::new(), visit)
}

/// Collects [`for_each_solution`].
pub fn enumerate(target: &Fraction, k: usize, min_denom: &BigUint) -> Result<Vec<Vec<BigUint>>> {
    let mut out = Vec::new();
    for_each_solution(target, k, min_denom, |t| {
        out.push(t.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Same output as [`enumerate`], with the subtrees under the first two
/// denominator choices spread over `jobs` workers and merged in order.
pub fn enumerate_parallel(
    target: &Fraction,
    k: usize,
    min_denom: &BigUint,
    jobs: usize,
) -> Result<Vec<Vec<BigUint>>> {
    check_pre(target, k, min_denom)?;
    if jobs <= 1 || k <= 3 {
        return enumerate(target, k, min_denom);
    }
    let root = SearchBounds {
        remainder: target.clone(),
        terms_left: k,
        min_next_denominator: min_denom.clone(),
    };
    let mut frontier = Vec::new();
    for (n1, s1) in children(&root) {
        for (n2, s2) in children(&s1) {
            frontier.push((vec![n1.clone(), n2], s2));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("worker pool: {e}")))?;
    let parts: Vec<Vec<Vec<BigUint>>> = pool.install(|| {
        frontier
            .par_iter()
            .map(|(prefix, state)| {
                let mut out = Vec::new();
                let _ = run_from(state, prefix.clone(), &BTreeSet::new(), &mut |t: &[BigUint]| {
                    out.push(t.to_vec());
                    ControlFlow::Continue(())
                });
                out
            })
            .collect()
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Explorable children of a node, in increasing order.
fn children(node: &SearchBounds) -> Vec<(BigUint, SearchBounds)> {
    let Some((lo, hi)) = node.candidate_range() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut n = lo;
    while n <= hi {
        if node.admits(&n) {
            let rem = &node.remainder - &Fraction::unit(&n).expect("n >= 1");
            out.push((
                n.clone(),
                SearchBounds {
                    remainder: rem,
                    terms_left: node.terms_left - 1,
                    min_next_denominator: &n + 1u32,
                },
            ));
        }
        n += 1u32;
    }
    out
}

/// `F(k)`, `D_k` and `v(k)` with the default ceiling.
pub fn summarize(k: usize) -> Result<EnumSummary> {
    summarize_with(k, &EnumConfig::default())
}

pub fn summarize_with(k: usize, config: &EnumConfig) -> Result<EnumSummary> {
    if k > config.ceiling {
        return Err(Error::ResourceLimit {
            what: format!("k = {k}"),
            ceiling: config.ceiling,
        });
    }
    let sols = enumerate_parallel(&Fraction::one(), k, &BigUint::one(), config.jobs)?;
    Ok(EnumSummary::from_solutions(k, &sols))
}

fn check_pre(target: &Fraction, k: usize, min_denom: &BigUint) -> Result<()> {
    if !target.is_positive() {
        return domain(format!("target {target} must be positive"));
    }
    if k == 0 {
        return domain("k must be positive");
    }
    if min_denom.is_zero() {
        return domain("min_denom must be at least 1");
    }
    Ok(())
}

/// The search with an exclusion set. Excluded integers are never placed.
pub(crate) fn search<F>(
    target: &Fraction,
    k: usize,
    min_denom: &BigUint,
    excluded: &BTreeSet<BigUint>,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[BigUint]) -> ControlFlow<()>,
{
    check_pre(target, k, min_denom)?;
    let root = SearchBounds {
        remainder: target.clone(),
        terms_left: k,
        min_next_denominator: min_denom.clone(),
    };
    let _ = run_from(&root, Vec::new(), excluded, &mut visit);
    Ok(())
}

type Visitor<'a> = dyn FnMut(&[BigUint]) -> ControlFlow<()> + 'a;

fn run_from(
    state: &SearchBounds,
    prefix: Vec<BigUint>,
    excluded: &BTreeSet<BigUint>,
    visit: &mut Visitor<'_>,
) -> ControlFlow<()> {
    let Some((p, q)) = state.remainder.to_biguint_parts() else {
        return ControlFlow::Continue(());
    };
    if p.is_zero() {
        return ControlFlow::Continue(());
    }
    let mut walk = Walk {
        excluded,
        visit,
        emit_buf: Vec::new(),
    };
    let min = state.min_next_denominator.clone().max(BigUint::one());
    match (p.to_u128(), q.to_u128(), min.to_u128()) {
        (Some(p), Some(q), Some(min)) => {
            let mut prefix: Vec<u128> = match prefix.iter().map(|n| n.to_u128()).collect() {
                Some(v) => v,
                None => return walk.node::<BigUint>(p.into(), q.into(), state.terms_left, min.into(), &mut prefix.clone()),
            };
            walk.node::<u128>(p, q, state.terms_left, min, &mut prefix)
        }
        _ => walk.node::<BigUint>(p, q, state.terms_left, min, &mut prefix.clone()),
    }
}

/// Integer arithmetic the walk needs. `u128` reports overflow through
/// `None`; `BigUint` never does.
trait Word: Clone + Ord + Sized {
    fn from_u64(v: u64) -> Self;
    fn to_big(&self) -> BigUint;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn rem(&self, o: &Self) -> Self;
    fn gcd_w(&self, o: &Self) -> Self;
    fn eq_zero(&self) -> bool;
    fn eq_one(&self) -> bool;
}

impl Word for u128 {
    fn from_u64(v: u64) -> Self {
        v as u128
    }
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn rem(&self, o: &Self) -> Self {
        self % o
    }
    fn gcd_w(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn eq_zero(&self) -> bool {
        *self == 0
    }
    fn eq_one(&self) -> bool {
        *self == 1
    }
}

impl Word for BigUint {
    fn from_u64(v: u64) -> Self {
        BigUint::from(v)
    }
    fn to_big(&self) -> BigUint {
        self.clone()
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn rem(&self, o: &Self) -> Self {
        self % o
    }
    fn gcd_w(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn eq_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn eq_one(&self) -> bool {
        One::is_one(self)
    }
}

struct Walk<'a, 'v> {
    excluded: &'a BTreeSet<BigUint>,
    visit: &'a mut Visitor<'v>,
    emit_buf: Vec<BigUint>,
}

impl Walk<'_, '_> {
    fn is_excluded<W: Word>(&self, n: &W) -> bool {
        !self.excluded.is_empty() && self.excluded.contains(&n.to_big())
    }

    fn emit<W: Word>(&mut self, prefix: &[W], tail: &[&W]) -> ControlFlow<()> {
        self.emit_buf.clear();
        self.emit_buf.extend(prefix.iter().map(Word::to_big));
        self.emit_buf.extend(tail.iter().map(|w| w.to_big()));
        let buf = std::mem::take(&mut self.emit_buf);
        let flow = (self.visit)(&buf);
        self.emit_buf = buf;
        flow
    }

    /// Remainder `p/q` in lowest terms, `ℓ ≥ 1` terms to place, each at
    /// least `min ≥ 1`.
    fn node<W: Word>(&mut self, p: W, q: W, left: usize, min: W, prefix: &mut Vec<W>) -> ControlFlow<()> {
        let one = W::from_u64(1);
        if left == 1 {
            if p.eq_one() && q >= min && !self.is_excluded(&q) {
                return self.emit(prefix, &[&q]);
            }
            return ControlFlow::Continue(());
        }
        let left_w = W::from_u64(left as u64);
        // Every product formed below is bounded by q·hi and left·q.
        let guard = left_w.mul(&q).and_then(|lq| {
            let hi = lq.div(&p);
            q.mul(&hi).map(|_| hi)
        });
        let Some(hi) = guard else {
            return self.promote(&p, &q, left, &min, prefix);
        };
        let lo = q.div(&p).add(&one).expect("below hi").max(min);
        if left == 2 {
            return self.last_pair(&p, &q, lo, prefix);
        }
        let mut n = lo;
        while n <= hi {
            if !self.is_excluded(&n) {
                let qn = q.mul(&n).expect("guarded");
                let pn = p.mul(&n).expect("guarded");
                let np = pn.sub(&q);
                let g = np.gcd_w(&qn);
                let next_min = n.add(&one).expect("guarded");
                prefix.push(n.clone());
                let flow = self.node(np.div(&g), qn.div(&g), left - 1, next_min, prefix);
                prefix.pop();
                flow?;
            }
            n = n.add(&one).expect("guarded");
        }
        ControlFlow::Continue(())
    }

    /// Places the final two terms `n < y` with `1/n + 1/y = p/q`.
    fn last_pair<W: Word>(&mut self, p: &W, q: &W, lo: W, prefix: &[W]) -> ControlFlow<()> {
        let one = W::from_u64(1);
        // n < 2q/p, so n ≤ ⌈2q/p⌉ − 1 = ⌊(2q − 1)/p⌋.
        let two_q = q.add(q).expect("guarded");
        let hi = two_q.sub(&one).div(p);
        let mut n = lo;
        while n <= hi {
            let qn = q.mul(&n).expect("guarded");
            let den = p.mul(&n).expect("guarded").sub(q);
            if qn.rem(&den).eq_zero() {
                let y = qn.div(&den);
                if !self.is_excluded(&n) && !self.is_excluded(&y) {
                    self.emit(prefix, &[&n, &y])?;
                }
            }
            n = n.add(&one).expect("guarded");
        }
        ControlFlow::Continue(())
    }

    fn promote<W: Word>(&mut self, p: &W, q: &W, left: usize, min: &W, prefix: &[W]) -> ControlFlow<()> {
        let mut big: Vec<BigUint> = prefix.iter().map(Word::to_big).collect();
        self.node::<BigUint>(p.to_big(), q.to_big(), left, min.to_big(), &mut big)
    }
}
