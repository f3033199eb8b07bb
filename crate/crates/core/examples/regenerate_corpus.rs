//! Rewrites the bundled corpus directory from the group constructions.
//!
//! cargo run --release --example regenerate_corpus [dir]

use std::path::PathBuf;

fn main() -> agc::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus"));
    let n = agc::corpus::write_bundled_corpus(&dir)?;
    println!("wrote {n} group files to {}", dir.display());
    Ok(())
}
