//! Builds the order-1500 witness and prints every verification record.

use std::time::Instant;

use agc::verify::analyze_group;
use agc::witness::build_witness;

fn main() -> agc::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "paper-1500".into());
    let w = build_witness(&name)?;
    let start = Instant::now();
    let report = analyze_group(&w.name, &w.group);
    println!("{}: {}", report.name, report.invariants);
    for c in &report.checks {
        println!("  {:<42} {:<22} {} ms", c.id, c.status.as_str(), c.millis);
    }
    println!("all pass: {} ({:.2?})", report.all_pass(), start.elapsed());
    Ok(())
}
