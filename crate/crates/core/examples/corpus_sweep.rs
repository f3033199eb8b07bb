//! Writes the bundled corpus to a temporary directory and sweeps it.
//!
//! cargo run --release --example corpus_sweep [jobs]

use std::time::Instant;

use agc::corpus::{run_corpus, summary_csv, write_bundled_corpus};

fn main() -> agc::Result<()> {
    let jobs = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let dir = std::env::temp_dir().join(format!("agc-corpus-{}", std::process::id()));
    let n = write_bundled_corpus(&dir)?;
    let start = Instant::now();
    let outcome = run_corpus(&dir, jobs)?;
    print!("{}", summary_csv(&outcome.reports));
    println!(
        "{n} files, {} failing, {} skipped, {:.2?} on {jobs} threads",
        outcome.reports.iter().filter(|r| !r.all_pass()).count(),
        outcome.skipped.len(),
        start.elapsed()
    );
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
