//! Sylow systems and system normalizers of the order-1500 witness.

use agc::structure::{derived_series, fitting_subgroup, sylow_system, sylow_systems_in, system_normalizer};
use agc::witness::build_witness;

fn main() -> agc::Result<()> {
    let w = build_witness("paper-1500")?;
    let g = &w.group;
    let system = sylow_system(g)?;
    for (p, order, gens) in system.describe() {
        println!("Sylow {p}-subgroup of order {order}, generated by {gens:?}");
    }
    let norm = system_normalizer(g, &g.whole(), &system);
    let derived = derived_series(g).term(1).clone();
    println!("system normalizer order {}", norm.members.order());
    println!(
        "meets G' in {} element(s); |N||G'| = {}",
        norm.members.intersection(g, &derived).order(),
        norm.members.order() * derived.order()
    );
    println!("Fitting subgroup order {}", fitting_subgroup(g).order());
    let hall = system.hall(g, &[2, 3]);
    println!("Hall {{2,3}}-subgroup order {}", hall.order());

    let ds = derived_series(g);
    let relative = sylow_systems_in(g, ds.term(1), 3)?;
    println!("first {} Sylow systems of G':", relative.len());
    for s in &relative {
        let sizes: Vec<usize> = s.sylows.values().map(|p| p.order()).collect();
        let rn = system_normalizer(g, &g.whole(), s);
        println!("  sizes {sizes:?}, normalizer in G of order {}", rn.members.order());
    }
    Ok(())
}
