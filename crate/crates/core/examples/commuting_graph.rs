//! Commuting graph of a few groups: component count, diameter and a pair of
//! vertices realizing it.

use agc::families::{dihedral, metacyclic, symmetric};
use agc::graph::twin_reduce;
use agc::{build_commuting_graph, construct::direct_product};

fn main() -> agc::Result<()> {
    let groups = [
        ("S4", symmetric(4)),
        ("D10", dihedral(5)),
        ("S3 x S3", direct_product(&symmetric(3), &symmetric(3))?),
        ("F21 x F21", direct_product(&metacyclic(7, 3), &metacyclic(7, 3))?),
    ];
    for (name, g) in &groups {
        let graph = build_commuting_graph(g);
        let d = graph.diameter();
        let twins = twin_reduce(g, &graph);
        print!(
            "{name:<10} vertices {:>4}  edges {:>6}  {}",
            graph.vertices().len(),
            graph.edges().len(),
            d.status.as_str()
        );
        match (d.diameter, graph.witness_elements(&d)) {
            (Some(k), Some((x, y))) => println!(
                "  diameter {k} between {} and {}",
                g.element(x),
                g.element(y)
            ),
            _ => println!("  {} components", d.component_count),
        }
        println!("           twin classes {}", twins.classes.len());
    }
    Ok(())
}
