// Greedy against shortest decompositions of `(b−1)/b`, and the bridge from
// membership in D_k to short decompositions.
//
// cargo run --release --example shortest -- 5

use std::error::Error;

use num_traits::ToPrimitive;
use unitfrac::bounds::{bridge_check, growth_references};
use unitfrac::decompose::{greedy, shortest, Exclusions};
use unitfrac::enumeration::summarize;
use unitfrac::Fraction;

pub fn run_example(k: usize) -> Result<(), Box<dyn Error>> {
    let none = Exclusions::new();
    println!("{:>4} {:>7} {:>9}  witness", "b", "greedy", "shortest");
    for b in 2u64..=16 {
        let f = Fraction::new(b - 1, b)?;
        let g = greedy(&f, &none)?;
        let s = shortest(&f, 5, &none)?.ok_or("no witness within 5 terms")?;
        println!("{b:>4} {:>7} {:>9}  {}", g.len(), s.min_terms, s.witness);
    }

    let summary = summarize(k)?;
    let mut worst = 0;
    for b in summary.denominators.iter().filter_map(|b| b.to_u64()).filter(|b| (2..=500).contains(b)) {
        let check = bridge_check(&summary, b)?;
        assert!(check.holds(), "bridge failed at b = {b}");
        worst = worst.max(check.shortest.map_or(0, |s| s.min_terms));
    }
    println!("\nevery b <= 500 in D_{k} has (b-1)/b in at most {worst} terms");
    if let Some((a, r)) = growth_references(summary.smallest_missing) {
        println!("v({k}) = {}: ln b / ln ln b = {a:.3}, sqrt ln b = {r:.3}", summary.smallest_missing);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let k = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    run_example(k)
}
