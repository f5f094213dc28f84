//! Exact arithmetic for unit fraction decompositions of 1.
//!
//! The crate enumerates the sets `S_k` of `k`-term decompositions
//! `1 = 1/n₁ + ⋯ + 1/n_k` with `n₁ < ⋯ < n_k`, derives `F(k) = |S_k|`, the
//! denominator set `D_k` and the smallest missing denominator `v(k)`, and
//! implements the constructions that move decompositions between lengths:
//! splitting identities, anchor-preserving extension, the telescoping
//! gadget, and an anchored pipeline that places a required denominator into
//! a decomposition of 1 within a term budget.

pub mod arith;
pub mod bounds;
pub mod certificate;
mod decimal;
pub mod decompose;
pub mod enumeration;
pub mod error;
pub mod extension;
pub mod fraction;
pub mod identities;

pub use error::{Error, Result};
pub use fraction::{sum_of_reciprocals, verify_decomposition, Decomposition, FailureKind, Fraction, VerificationReport};
