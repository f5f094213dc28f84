// Runs the anchor-preserving extension over every tuple of S_k and every
// anchor in it, and prints how often each case fires with a first instance.
//
// cargo run --release --example extension_branches -- 6

use std::collections::BTreeMap;
use std::error::Error;

use num_bigint::BigUint;
use unitfrac::enumeration::enumerate;
use unitfrac::extension::{extend_with_anchor, ExtensionBranch};
use unitfrac::{Decomposition, Fraction};

pub fn run_example(k: usize) -> Result<BTreeMap<ExtensionBranch, usize>, Box<dyn Error>> {
    let mut seen: BTreeMap<ExtensionBranch, (usize, String)> = BTreeMap::new();
    for tuple in enumerate(&Fraction::one(), k, &BigUint::from(1u32))? {
        let dec = Decomposition::new(Fraction::one(), tuple)?;
        for m in dec.denominators() {
            let trace = extend_with_anchor(&dec, m)?;
            let entry = seen
                .entry(trace.branch)
                .or_insert_with(|| (0, format!("{dec} anchor {m} -> {}", trace.output)));
            entry.0 += 1;
        }
    }
    println!("k = {k}");
    for (branch, (count, first)) in &seen {
        println!("  {branch:<28} {count:>8}   e.g. {first}");
    }
    Ok(seen.into_iter().map(|(b, (c, _))| (b, c)).collect())
}

fn main() -> Result<(), Box<dyn Error>> {
    let k = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    run_example(k)?;
    Ok(())
}
