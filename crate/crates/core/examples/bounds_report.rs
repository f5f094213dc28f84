// Exact counts against the lower and upper bounds for v(k), for a few values
// of the external constant C.
//
// cargo run --release --example bounds_report -- 6

use std::error::Error;

use unitfrac::bounds::{check_inequalities, rows_to_csv, BoundConfig};
use unitfrac::enumeration::summarize;

pub fn run_example(max_k: usize) -> Result<(), Box<dyn Error>> {
    let summaries = (1..=max_k).map(summarize).collect::<Result<Vec<_>, _>>()?;
    for vose_c in [0.1, 1.0, 10.0] {
        let config = BoundConfig::new(vose_c)?;
        let rows = check_inequalities(&summaries, &config);
        println!("C = {vose_c}, c = {:.6e}", config.derived_c);
        print!("{}", rows_to_csv(&rows));
        for r in rows.iter().filter(|r| !r.holds) {
            println!("  k = {}: {:?}", r.k, r.violations);
        }
        println!();
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let k = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    run_example(k)
}
