// Builds decompositions of 1 that contain a chosen denominator, with the
// default base decomposer and with a plain greedy base that is allowed to
// use the anchor (which forces the telescoping gadget path).
//
// cargo run --example anchored -- 7 433 1000

use std::error::Error;

use unitfrac::decompose::{anchored_unit, anchored_unit_with, AnchoredOutcome, BaseDecomposer, Greedy, DEFAULT_RETRY_BOUND};

fn show(label: &str, outcome: AnchoredOutcome) {
    match outcome {
        AnchoredOutcome::Found(r) => println!(
            "  {label:<8} {} terms, base {}, gadget {}, retries {}: {}",
            r.decomposition.len(),
            r.base_terms,
            r.used_gadget,
            r.retries,
            r.decomposition
        ),
        AnchoredOutcome::Unsat { reason, .. } => println!("  {label:<8} unsat: {reason}"),
    }
}

pub fn run_example(anchors: &[u64]) -> Result<(), Box<dyn Error>> {
    let greedy = Greedy { exclude_anchor: false };
    for &m in anchors {
        println!("m = {m}");
        show("default", anchored_unit(m, 41)?);
        show(&greedy.name(), anchored_unit_with(m, 41, &greedy, DEFAULT_RETRY_BOUND)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    let mut anchors: Vec<u64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    if anchors.is_empty() {
        anchors = vec![2, 7, 433];
    }
    run_example(&anchors)
}
