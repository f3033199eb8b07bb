//! Exports the commuting graph of the order-60 witness as DOT and JSON.
//!
//! cargo run --example graph_export > g.dot

use agc::build_commuting_graph;
use agc::witness::build_witness;

fn main() -> agc::Result<()> {
    let w = build_witness("paper-60")?;
    let graph = build_commuting_graph(&w.group);
    print!("{}", graph.to_dot(&w.group));
    eprintln!("{}", graph.to_json());
    Ok(())
}
