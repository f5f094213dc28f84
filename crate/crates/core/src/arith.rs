//! Primality and factor finding on big integers, enough for the composite
//! splits. Small factors come from trial division; anything left over goes
//! through Miller–Rabin and Pollard's rho.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1 << 16;
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller–Rabin with the first thirteen prime bases. Deterministic below
/// 3.3·10²⁴, overwhelmingly likely beyond.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in &MR_BASES {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `true` for integers with a factorisation `a·b`, `a, b ≥ 2`.
pub fn is_composite(n: &BigUint) -> bool {
    n >= &BigUint::from(4u32) && !is_prime(n)
}

/// Smallest prime dividing `n`, or `None` when `n < 2`.
pub fn smallest_prime_factor(n: &BigUint) -> Option<BigUint> {
    if n < &BigUint::from(2u32) {
        return None;
    }
    let root = n.sqrt();
    let limit = root.to_u64().map_or(TRIAL_LIMIT, |r| r.min(TRIAL_LIMIT));
    let mut p = 2u64;
    while p <= limit {
        if (n % p).is_zero() {
            return Some(BigUint::from(p));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if root <= BigUint::from(limit) {
        return Some(n.clone());
    }
    let mut primes = Vec::new();
    factor_into(n.clone(), &mut primes);
    primes.into_iter().min()
}

fn factor_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let f = pollard_rho(&n);
    factor_into(&n / &f, out);
    factor_into(f, out);
}

/// A nontrivial factor of composite `n` (Brent's variant).
fn pollard_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..r.min(128) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}
