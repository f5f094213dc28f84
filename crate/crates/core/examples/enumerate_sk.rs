// Enumerates S_k for k = 1..=K and prints F(k), |D_k| and v(k).
//
// cargo run --release --example enumerate_sk -- 6

use std::error::Error;
use std::time::Instant;

use unitfrac::enumeration::summarize;

pub fn run_example(max_k: usize) -> Result<(), Box<dyn Error>> {
    println!("{:>2} {:>8} {:>6} {:>5} {:>9}", "k", "F(k)", "|D_k|", "v(k)", "secs");
    for k in 1..=max_k {
        let start = Instant::now();
        let s = summarize(k)?;
        println!(
            "{:>2} {:>8} {:>6} {:>5} {:>9.3}",
            k,
            s.count,
            s.denominators.len(),
            s.smallest_missing,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let max_k = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    run_example(max_k)
}
