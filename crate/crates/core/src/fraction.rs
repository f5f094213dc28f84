//! Exact rationals and validation of unit fraction decompositions.
//!
//! [`Fraction`] is always held in lowest terms with a positive denominator.
//! Denominators of unit fractions are non-negative big integers; zero is the
//! only value that counts as nonpositive.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// An exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(BigRational);

impl Fraction {
    /// Builds `numer / denom`, reducing to lowest terms. A negative
    /// denominator moves its sign onto the numerator.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return domain("fraction with zero denominator");
        }
        Ok(Fraction(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Fraction(BigRational::zero())
    }

    pub fn one() -> Self {
        Fraction(BigRational::one())
    }

    /// `1/n` for a positive `n`.
    pub fn unit(n: &BigUint) -> Result<Self> {
        if n.is_zero() {
            return domain("unit fraction 1/0");
        }
        Ok(Fraction(BigRational::new_raw(
            BigInt::one(),
            BigInt::from(n.clone()),
        )))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Re-reduces the value. A no-op for every value this type can hold.
    pub fn normalize(&self) -> Self {
        Fraction(BigRational::new(self.numer().clone(), self.denom().clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("reciprocal of zero");
        }
        Ok(Fraction(self.0.recip()))
    }

    /// Numerator and denominator as unsigned values, for non-negative fractions.
    pub fn to_biguint_parts(&self) -> Option<(BigUint, BigUint)> {
        Some((self.numer().to_biguint()?, self.denom().to_biguint()?))
    }

}

impl From<BigRational> for Fraction {
    fn from(r: BigRational) -> Self {
        Fraction(r)
    }
}

impl Add for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        Fraction(&self.0 + &rhs.0)
    }
}

impl Sub for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        Fraction(&self.0 - &rhs.0)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `a/b` or a bare integer `a`, in decimal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Fraction::new(parse(n)?, parse(d)?),
            None => Ok(Fraction::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact `Σ 1/nᵢ` in lowest terms. The empty sum is zero.
pub fn sum_of_reciprocals(denoms: &[BigUint]) -> Result<Fraction> {
    if denoms.iter().any(Zero::is_zero) {
        return domain("nonpositive denominator in reciprocal sum");
    }
    if denoms.is_empty() {
        return Ok(Fraction::zero());
    }
    // Common denominator first, one reduction at the end.
    let lcm = denoms.iter().fold(BigUint::one(), |acc, n| acc.lcm(n));
    let numer: BigUint = denoms.iter().map(|n| &lcm / n).sum();
    Fraction::new(numer, lcm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    None,
    NotSorted,
    Duplicate,
    BadSum,
    Nonpositive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub failure_kind: FailureKind,
    /// Sum over the positive entries. Zero entries contribute nothing.
    pub achieved_sum: Fraction,
}

/// Checks that `denoms` is strictly increasing, positive, and that its
/// reciprocals sum to exactly `target`. Failures are reported, never raised.
///
/// When several defects are present the first in the order nonpositive,
/// duplicate, not sorted, bad sum is the one reported.
pub fn verify_decomposition(target: &Fraction, denoms: &[BigUint]) -> VerificationReport {
    let positive: Vec<BigUint> = denoms.iter().filter(|n| !n.is_zero()).cloned().collect();
    let achieved_sum = sum_of_reciprocals(&positive).expect("zero entries filtered");
    let failure_kind = if positive.len() != denoms.len() {
        FailureKind::Nonpositive
    } else if has_duplicate(denoms) {
        FailureKind::Duplicate
    } else if denoms.windows(2).any(|w| w[0] >= w[1]) {
        FailureKind::NotSorted
    } else if &achieved_sum != target {
        FailureKind::BadSum
    } else {
        FailureKind::None
    };
    VerificationReport {
        valid: failure_kind == FailureKind::None,
        failure_kind,
        achieved_sum,
    }
}

fn has_duplicate(denoms: &[BigUint]) -> bool {
    let mut sorted: Vec<&BigUint> = denoms.iter().collect();
    sorted.sort_unstable();
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// A verified representation of `target` as a sum of distinct unit fractions,
/// denominators strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    target: Fraction,
    denominators: Vec<BigUint>,
}

impl Decomposition {
    /// Verifies `denominators` against `target`.
    pub fn new(target: Fraction, denominators: Vec<BigUint>) -> Result<Self> {
        let report = verify_decomposition(&target, &denominators);
        if !report.valid {
            return domain(format!(
                "{} is not a decomposition of {target}: {:?} (sum {})",
                fmt_denoms(&denominators),
                report.failure_kind,
                report.achieved_sum
            ));
        }
        Ok(Decomposition {
            target,
            denominators,
        })
    }

    /// Sorts first, then verifies.
    pub fn from_unsorted(target: Fraction, mut denominators: Vec<BigUint>) -> Result<Self> {
        denominators.sort_unstable();
        Self::new(target, denominators)
    }

    pub fn of_one<I, T>(denominators: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        Self::new(
            Fraction::one(),
            denominators.into_iter().map(Into::into).collect(),
        )
    }

    pub fn target(&self) -> &Fraction {
        &self.target
    }

    pub fn denominators(&self) -> &[BigUint] {
        &self.denominators
    }

    pub fn into_denominators(self) -> Vec<BigUint> {
        self.denominators
    }

    pub fn len(&self) -> usize {
        self.denominators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.denominators.is_empty()
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        self.denominators.binary_search(n).is_ok()
    }

    pub fn verify(&self) -> VerificationReport {
        verify_decomposition(&self.target, &self.denominators)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.target, fmt_denoms(&self.denominators))
    }
}

pub(crate) fn fmt_denoms(denoms: &[BigUint]) -> String {
    let parts: Vec<String> = denoms.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Converts small integers into big denominators.
pub fn denoms<T: Into<BigUint> + Copy>(values: &[T]) -> Vec<BigUint> {
    values.iter().map(|&v| v.into()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn sums_match_frozen_values() {
        assert_eq!(sum_of_reciprocals(&denoms(&[2u32, 3, 6])).unwrap(), Fraction::one());
        assert_eq!(sum_of_reciprocals(&[]).unwrap(), Fraction::zero());
        assert_eq!(sum_of_reciprocals(&denoms(&[2u32, 4, 5, 20])).unwrap(), Fraction::one());
        assert!(matches!(
            sum_of_reciprocals(&denoms(&[2u32, 0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn verification_reports() {
        let one = Fraction::one();
        assert!(verify_decomposition(&one, &denoms(&[2u32, 3, 7, 42])).valid);

        let dup = verify_decomposition(&one, &denoms(&[2u32, 3, 6, 6]));
        assert!(!dup.valid);
        assert_eq!(dup.failure_kind, FailureKind::Duplicate);

        let bad = verify_decomposition(&one, &denoms(&[2u32, 3, 5]));
        assert_eq!(bad.failure_kind, FailureKind::BadSum);
        assert_eq!(bad.achieved_sum, frac("31/30"));

        let unsorted = verify_decomposition(&one, &denoms(&[3u32, 2, 6]));
        assert_eq!(unsorted.failure_kind, FailureKind::NotSorted);
        assert_eq!(unsorted.achieved_sum, one);

        let zero = verify_decomposition(&one, &denoms(&[0u32, 1]));
        assert_eq!(zero.failure_kind, FailureKind::Nonpositive);
    }

    #[test]
    fn fraction_parsing_and_display() {
        assert_eq!(frac("10/20").to_string(), "1/2");
        assert_eq!(frac("4/-6").to_string(), "-2/3");
        assert_eq!(frac("7").to_string(), "7");
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("x/2".parse::<Fraction>().is_err());
    }

    #[test]
    fn decomposition_rejects_invalid() {
        assert!(Decomposition::of_one([2u32, 3, 5]).is_err());
        let d = Decomposition::from_unsorted(Fraction::one(), denoms(&[6u32, 2, 3])).unwrap();
        assert_eq!(d.denominators(), denoms(&[2u32, 3, 6]).as_slice());
        assert!(d.contains(&BigUint::from(3u32)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn normalization_is_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
                let x = Fraction::new(n, d).unwrap();
                prop_assert_eq!(x.normalize(), x.clone());
                prop_assert_eq!(x.normalize().normalize(), x.normalize());
                prop_assert!(x.numer().gcd(x.denom()).is_one() || x.is_zero());
            }

            #[test]
            fn reciprocal_sum_is_permutation_invariant(
                mut v in proptest::collection::vec(1u64..5_000, 0..12),
                seed in any::<u64>(),
            ) {
                let before = sum_of_reciprocals(&denoms(&v)).unwrap();
                let len = v.len();
                if len > 1 {
                    v.rotate_left((seed as usize) % len);
                    v.reverse();
                }
                prop_assert_eq!(sum_of_reciprocals(&denoms(&v)).unwrap(), before);
            }
        }
    }
}
