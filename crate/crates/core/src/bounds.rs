//! The constants and inequalities around `v(k)`, checked against exact
//! enumeration results.
//!
//! The lower bound is `v(k) ≥ e^{ck²}` with `c = min(ln 2/40², 1/(41C)²)`.
//! `C` is an absolute constant from a known bound on short decompositions of
//! `(b−1)/b` with no published value, so every `c` here is conditional on `C`.
//! The upper bound is `v(k) ≤ |D_k| + 2 ≤ k·F(k) + 2`.

use serde::Serialize;

use crate::decompose::{shortest, Exclusions, ShortestResult};
use crate::enumeration::EnumSummary;
use crate::error::{domain, Result};
use crate::fraction::Fraction;

pub const DEFAULT_VOSE_C: f64 = 1.0;

/// `min(ln 2 / 1600, 1 / (1681 C²))`.
pub fn compute_c(vose_c: f64) -> Result<f64> {
    if vose_c.is_nan() || vose_c <= 0.0 {
        return domain(format!("C = {vose_c} must be positive"));
    }
    let first = std::f64::consts::LN_2 / 1600.0;
    let second = 1.0 / (41.0 * vose_c).powi(2);
    Ok(first.min(second))
}

/// `e^{ck²}`, rounded to nearest.
pub fn lower_bound(k: u64, c: f64) -> f64 {
    let k = k as f64;
    (c * k * k).exp()
}

/// An upper enclosure of `e^{ck²}`: the exponent and the result are each
/// pushed up past the rounding error of the operation that produced them.
pub fn lower_bound_rounded_up(k: u64, c: f64) -> f64 {
    let k = k as f64;
    let x = (c * k * k).next_up().next_up();
    x.exp().next_up().next_up()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundConfig {
    #[serde(rename = "vose_C")]
    pub vose_constant_c: f64,
    #[serde(rename = "c")]
    pub derived_c: f64,
}

impl BoundConfig {
    pub fn new(vose_c: f64) -> Result<Self> {
        Ok(BoundConfig {
            vose_constant_c: vose_c,
            derived_c: compute_c(vose_c)?,
        })
    }
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig::new(DEFAULT_VOSE_C).expect("default C is positive")
    }
}

/// One line of the bound table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub k: u64,
    #[serde(rename = "F")]
    pub count: u64,
    #[serde(rename = "|D|")]
    pub d_size: u64,
    #[serde(rename = "v")]
    pub exact_v: Option<u64>,
    pub lower_bound: f64,
    /// `k·F(k) + 2`.
    pub upper_bound: Option<u128>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

/// Checks `e^{ck²} ≤ v(k) ≤ |D_k| + 2 ≤ k·F(k) + 2` for every summary. A
/// failed link is a falsification and is listed in `violations`.
pub fn check_inequalities(summaries: &[EnumSummary], config: &BoundConfig) -> Vec<ReportRow> {
    summaries
        .iter()
        .map(|s| {
            let k = s.k as u64;
            let v = s.smallest_missing;
            let d_size = s.denominators.len() as u64;
            let d_bound = u128::from(d_size) + 2;
            let upper = u128::from(k) * u128::from(s.count) + 2;
            let lb_up = lower_bound_rounded_up(k, config.derived_c);
            let mut violations = Vec::new();
            // v is far below 2^53 here, so the conversion is exact.
            if lb_up > v as f64 {
                violations.push(format!("e^(ck^2) = {lb_up} exceeds v({k}) = {v}"));
            }
            if u128::from(v) > d_bound {
                violations.push(format!("v({k}) = {v} exceeds |D_k| + 2 = {d_bound}"));
            }
            if d_bound > upper {
                violations.push(format!("|D_k| + 2 = {d_bound} exceeds kF(k) + 2 = {upper}"));
            }
            ReportRow {
                k,
                count: s.count,
                d_size,
                exact_v: Some(v),
                lower_bound: lower_bound(k, config.derived_c),
                upper_bound: Some(upper),
                holds: violations.is_empty(),
                violations,
            }
        })
        .collect()
}

/// `k, F, |D|, v, lower_bound, upper_bound`.
pub fn rows_to_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from("k,F,|D|,v,lower_bound,upper_bound\n");
    for r in rows {
        let opt = |x: Option<String>| x.unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.k,
            r.count,
            r.d_size,
            opt(r.exact_v.map(|v| v.to_string())),
            r.lower_bound,
            opt(r.upper_bound.map(|u| u.to_string())),
        ));
    }
    out
}

/// Unscaled growth rates of the known upper bounds on `N(b)`: `ln b / ln ln b`
/// and `√(ln b)`. The implied constants are unknown, so these are only
/// reference shapes. `None` when `ln ln b ≤ 0`.
pub fn growth_references(b: u64) -> Option<(f64, f64)> {
    let lb = (b as f64).ln();
    let llb = lb.ln();
    (llb > 0.0).then(|| (lb / llb, lb.sqrt()))
}

/// `b ∈ D_k` gives a `(k−1)`-term decomposition of `(b−1)/b` by dropping
/// `1/b`. Returns the shortest witness found within `k − 1` terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeCheck {
    pub b: u64,
    pub k: usize,
    pub shortest: Option<ShortestResult>,
}

impl BridgeCheck {
    pub fn holds(&self) -> bool {
        self.shortest.as_ref().is_some_and(|s| s.min_terms < self.k)
    }
}

pub fn bridge_check(summary: &EnumSummary, b: u64) -> Result<BridgeCheck> {
    if b < 2 || !summary.contains(&b.into()) {
        return domain(format!("{b} is not a denominator in D_{}", summary.k));
    }
    if summary.k < 2 {
        return domain("bridge needs k >= 2");
    }
    let target = Fraction::new(b - 1, b)?;
    Ok(BridgeCheck {
        b,
        k: summary.k,
        shortest: shortest(&target, summary.k - 1, &Exclusions::new())?,
    })
}
