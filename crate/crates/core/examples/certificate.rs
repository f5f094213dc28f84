// Builds the anchored certificate for 2 ≤ m ≤ 432 with at most 41 terms,
// re-checks it, and optionally writes it to a file.
//
// cargo run --release --example certificate -- [OUT.json]

use std::error::Error;
use std::time::Instant;

use unitfrac::certificate::{certify, check_certificate, CertifyOutcome};

pub fn run_example(out: Option<&str>) -> Result<(), Box<dyn Error>> {
    let start = Instant::now();
    let cert = match certify(2, 432, 41, 1)? {
        CertifyOutcome::Complete(c) => c,
        CertifyOutcome::Failed { unsat } => return Err(format!("unsat anchors: {unsat:?}").into()),
    };
    let longest = cert.entries.iter().max_by_key(|e| e.terms).expect("nonempty");
    println!(
        "{} entries in {:.2}s; longest has {} terms (m = {})",
        cert.entries.len(),
        start.elapsed().as_secs_f64(),
        longest.terms,
        longest.m
    );
    let problems = check_certificate(&cert);
    println!("independent check: {}", if problems.is_empty() { "ok" } else { "FAILED" });
    for p in &problems {
        println!("  {p}");
    }
    if let Some(path) = out {
        std::fs::write(path, cert.to_json())?;
        println!("wrote {path}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let out = std::env::args().nth(1);
    run_example(out.as_deref())
}
