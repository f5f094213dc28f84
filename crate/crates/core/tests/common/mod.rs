//! Independent oracles shared by the integration tests. Nothing here calls
//! into the search code it is used to check.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduced `p/q` on `u128`.
fn reduce(p: u128, q: u128) -> (u128, u128) {
    let g = p.gcd(&q);
    (p / g, q / g)
}

/// All strictly increasing `k`-tuples with reciprocal sum 1, found without
/// any lower-bound pruning: each next denominator runs from `prev + 1` up to
/// `terms_left / remainder`, and overshooting choices are discarded. The last
/// term is accepted when the remainder is exactly its reciprocal.
pub fn naive_unit_decompositions(k: usize) -> Vec<Vec<u128>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    naive_rec(1, 1, k, 0, &mut prefix, &mut out);
    out
}

fn naive_rec(p: u128, q: u128, left: usize, prev: u128, prefix: &mut Vec<u128>, out: &mut Vec<Vec<u128>>) {
    if left == 1 {
        if p == 1 && q > prev {
            let mut t = prefix.clone();
            t.push(q);
            out.push(t);
        }
        return;
    }
    let cap = left as u128 * q / p;
    for n in prev + 1..=cap {
        // p/q − 1/n = (pn − q)/(qn), discarded when not positive.
        let pn = p * n;
        if pn <= q {
            continue;
        }
        let (np, nq) = reduce(pn - q, q * n);
        prefix.push(n);
        naive_rec(np, nq, left - 1, n, prefix, out);
        prefix.pop();
    }
}

/// Term-by-term `BigRational` accumulation.
pub fn rational_sum(terms: &[BigUint]) -> BigRational {
    terms.iter().fold(BigRational::zero(), |acc, n| {
        acc + BigRational::new(BigInt::one(), BigInt::from(n.clone()))
    })
}

pub fn to_u128(t: &[BigUint]) -> Vec<u128> {
    t.iter()
        .map(|n| {
            let digits = n.to_u64_digits();
            match digits.len() {
                0 => 0,
                1 => digits[0] as u128,
                2 => (digits[1] as u128) << 64 | digits[0] as u128,
                _ => panic!("{n} exceeds u128"),
            }
        })
        .collect()
}
