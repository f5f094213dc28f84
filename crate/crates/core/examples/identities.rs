// The two splitting identities, the 13-element perfect partition and the
// telescoping gadget for a chosen anchor.
//
// cargo run --example identities -- 1000

use std::error::Error;

use num_bigint::BigUint;
use unitfrac::identities::{check_perfect_partition, split_basic, split_composite, telescope_gadget, PerfectPartition};

pub fn run_example(m: u64) -> Result<(), Box<dyn Error>> {
    for n in [2u32, 7, 42] {
        let s = split_basic(&BigUint::from(n))?;
        println!("1/{} = 1/{} + 1/{}", s.source, s.first, s.second);
        assert!(s.holds());
    }
    let s = split_composite(&BigUint::from(15u32), &BigUint::from(3u32))?;
    println!("1/{} = 1/{} + 1/{}  (a = 3)", s.source, s.first, s.second);
    assert!(s.holds());

    let p = PerfectPartition::gadget();
    let report = check_perfect_partition(p.elements())?;
    println!("\npartition {:?}", p.elements());
    println!("  sum of reciprocals   {}", report.sum);
    println!("  all divisible by 3   {}", report.all_divisible_by_3);
    if let Some(r) = &report.min_pairwise_ratio {
        println!("  min adjacent ratio   {r}");
    }

    let g = telescope_gadget(m)?;
    let audit = g.audit();
    println!("\ngadget for m = {m} (t = {}), {} terms", g.offset_t, g.terms.len());
    println!("  head 1/{}", g.terms[0]);
    for (d, i, term) in g.labelled_products() {
        println!("  {d:>2} * (m+{i})(m+{}) = {term}", i + 1);
    }
    println!("  sum = {}", g.sum());
    println!("  {audit:?}");
    assert!(audit.sum_is_reciprocal);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let m = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1000);
    run_example(m)
}
