mod common;

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use unitfrac::bounds::{bridge_check, compute_c, lower_bound};
use unitfrac::decompose::{greedy, shortest, Exclusions};
use unitfrac::enumeration::{enumerate, enumerate_parallel, summarize, EnumSummary};
use unitfrac::extension::{extend_with_anchor, inject, ExtensionBranch};
use unitfrac::identities::telescope_gadget;
use unitfrac::{verify_decomposition, Decomposition, Fraction};

use common::{naive_unit_decompositions, rational_sum, to_u128};

fn one() -> Fraction {
    Fraction::one()
}

fn summaries(max_k: usize) -> Vec<EnumSummary> {
    (1..=max_k).map(|k| summarize(k).unwrap()).collect()
}

fn s_k(k: usize) -> Vec<Decomposition> {
    enumerate(&one(), k, &BigUint::one())
        .unwrap()
        .into_iter()
        .map(|t| Decomposition::new(one(), t).unwrap())
        .collect()
}

#[test]
fn every_solution_verifies() {
    for k in 1..=6 {
        for t in enumerate(&one(), k, &BigUint::one()).unwrap() {
            assert!(verify_decomposition(&one(), &t).valid, "{t:?}");
            assert!(rational_sum(&t).is_one());
        }
    }
}

#[test]
fn pruned_search_matches_naive_search() {
    for k in 1..=5 {
        let fast: Vec<Vec<u128>> = enumerate(&one(), k, &BigUint::one())
            .unwrap()
            .iter()
            .map(|t| to_u128(t))
            .collect();
        assert_eq!(fast, naive_unit_decompositions(k), "k = {k}");
    }
}

#[test]
fn counts_and_sets_are_monotone() {
    let s = summaries(6);
    for w in s[1..].windows(2) {
        assert!(w[0].count <= w[1].count, "F({}) > F({})", w[0].k, w[1].k);
        assert!(w[0].denominators.iter().all(|n| w[1].contains(n)));
        assert!(w[0].smallest_missing <= w[1].smallest_missing);
    }
    for x in &s {
        let d = x.denominators.len() as u64;
        assert!(x.smallest_missing <= d + 2);
        assert!(d + 2 <= x.k as u64 * x.count + 2);
    }
}

#[test]
fn parallel_enumeration_is_identical() {
    let seq = enumerate(&one(), 6, &BigUint::one()).unwrap();
    for jobs in [2, 4] {
        assert_eq!(enumerate_parallel(&one(), 6, &BigUint::one(), jobs).unwrap(), seq);
    }
}

#[test]
fn injection_is_injective_on_s4_and_s5() {
    for k in [4, 5] {
        let src = s_k(k);
        let images: BTreeSet<Vec<BigUint>> = src
            .iter()
            .map(|d| inject(d).unwrap().into_denominators())
            .collect();
        assert_eq!(images.len(), src.len(), "k = {k}");
        let target: BTreeSet<Vec<BigUint>> = s_k(k + 1).into_iter().map(|d| d.into_denominators()).collect();
        assert!(images.is_subset(&target));
    }
}

#[test]
fn branch_coverage_over_s5_and_s6() {
    let mut counts: BTreeMap<ExtensionBranch, usize> = BTreeMap::new();
    for k in [5, 6] {
        for d in s_k(k) {
            for m in d.denominators() {
                let t = extend_with_anchor(&d, m).unwrap();
                assert!(t.output.verify().valid && t.output.contains(m));
                assert_eq!(t.output.len(), k + 1);
                *counts.entry(t.branch).or_default() += 1;
            }
        }
    }
    // Only the two simple cases occur at these sizes; the composite case
    // first appears in S_7 and the prime cases never occur for target 1.
    let seen: Vec<ExtensionBranch> = counts.keys().copied().collect();
    assert_eq!(seen, [ExtensionBranch::AnchorNotLast, ExtensionBranch::LastSimple]);
    assert_eq!(counts[&ExtensionBranch::LastSimple], 72 + 2320);
}

#[test]
fn bridge_property_for_small_k() {
    for s in summaries(4).into_iter().skip(1) {
        for b in s.denominators.iter().filter_map(|b| b.to_u64()).filter(|&b| (2..=100).contains(&b)) {
            let check = bridge_check(&s, b).unwrap();
            assert!(check.holds(), "k = {}, b = {b}", s.k);
        }
    }
}

#[test]
fn shortest_lengths_for_known_fractions() {
    for (a, b, want) in [(1u32, 2u32, 1usize), (2, 3, 2), (3, 4, 2), (4, 5, 3), (5, 6, 2), (9, 10, 3), (10, 11, 4)] {
        let f = Fraction::new(a, b).unwrap();
        let r = shortest(&f, 4, &Exclusions::new()).unwrap().unwrap();
        assert_eq!(r.min_terms, want, "{a}/{b}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_output_is_valid(b in 2u64..200, a_frac in 0.0f64..1.0) {
        let a = ((a_frac * (b - 1) as f64) as u64).max(1);
        let f = Fraction::new(a, b).unwrap();
        let g = greedy(&f, &Exclusions::new()).unwrap();
        prop_assert!(g.verify().valid);
        let numer = f.numer().to_u64().unwrap() as usize;
        prop_assert!(g.len() <= numer);
        if let Some(s) = shortest(&f, 4, &Exclusions::new()).unwrap() {
            prop_assert!(s.min_terms <= g.len());
            prop_assert!(s.witness.verify().valid);
        }
    }

    #[test]
    fn greedy_with_exclusions_avoids_them(b in 3u64..200, a_frac in 0.0f64..1.0, ex in proptest::collection::btree_set(2u64..40, 0..6)) {
        let a = ((a_frac * (b - 1) as f64) as u64).max(1);
        let f = Fraction::new(a, b).unwrap();
        let ex: Exclusions = ex.into_iter().map(BigUint::from).collect();
        let g = greedy(&f, &ex).unwrap();
        prop_assert!(g.verify().valid);
        prop_assert!(g.denominators().iter().all(|n| !ex.contains(n)));
    }

    #[test]
    fn gadget_distinct_above_432(m in 433u64..=1_000_000_000) {
        let g = telescope_gadget(m).unwrap();
        let audit = g.audit();
        prop_assert!(audit.sum_is_reciprocal && audit.distinct && audit.head_is_smallest);
        prop_assert!(audit.all_divisible_by_3);
        prop_assert!(audit.max_gcd_shifted <= BigUint::from(432u32));
        prop_assert!(audit.max_gcd_shifted < BigUint::from(m));
    }

    #[test]
    fn c_is_nonincreasing_and_bound_increasing(c1 in 1e-3f64..1e3, c2 in 1e-3f64..1e3, k in 1u64..200) {
        let (lo, hi) = if c1 <= c2 { (c1, c2) } else { (c2, c1) };
        prop_assert!(compute_c(hi).unwrap() <= compute_c(lo).unwrap());
        let c = compute_c(lo).unwrap();
        prop_assert!(lower_bound(k + 1, c) > lower_bound(k, c));
        prop_assert!(lower_bound(k, c * 1.5) > lower_bound(k, c));
    }
}
