//! Structure of the order-1500 witness beyond its fingerprint.

mod common;

use agc::graph::build_commuting_graph;
use agc::structure::{
    center_in, derived_series, fitting_subgroup, permutable, sylow_system, sylow_systems_in,
    system_normalizer,
};
use agc::FiniteGroup;

fn witness() -> FiniteGroup {
    common::load_corpus_group("paper-1500")
}

#[test]
fn sylow_system_sizes_and_permutability() {
    let g = witness();
    let system = sylow_system(&g).unwrap();
    let sizes: Vec<(u64, usize)> = system.sylows.iter().map(|(&p, s)| (p, s.order())).collect();
    assert_eq!(sizes, vec![(2, 4), (3, 3), (5, 125)]);
    let sylows: Vec<_> = system.sylows.values().collect();
    for a in &sylows {
        for b in &sylows {
            assert!(permutable(&g, a, b));
        }
    }
}

#[test]
fn relative_system_normalizer_complements_second_derived() {
    let g = witness();
    let ds = derived_series(&g);
    let (derived, second) = (ds.term(1), ds.term(2));
    assert_eq!((derived.order(), second.order()), (375, 25));
    for system in sylow_systems_in(&g, derived, 4).unwrap() {
        let m = system_normalizer(&g, &g.whole(), &system).members;
        assert_eq!(m.order(), 60);
        assert_eq!(m.intersection(&g, second).order(), 1);
        assert_eq!(m.order() * second.order(), g.order());
    }
}

#[test]
fn hall_subgroup_of_order_12_complements_fitting() {
    let g = witness();
    let system = sylow_system(&g).unwrap();
    let h = system.hall(&g, &[2, 3]);
    let f = fitting_subgroup(&g);
    assert_eq!(h.order(), 12);
    assert_eq!(f.order(), 125);
    assert_eq!(h.intersection(&g, &f).order(), 1);
    // not a complement of G'' (order 25): 12 * 25 = 300
    assert_ne!(h.order() * derived_series(&g).term(2).order(), g.order());
}

#[test]
fn order_four_elements_reach_derived_center_within_three_steps() {
    let g = witness();
    let graph = build_commuting_graph(&g);
    let derived = derived_series(&g).term(1).clone();
    let z: Vec<usize> = center_in(&g, &derived).members().skip(1).collect();
    assert!(!z.is_empty());
    let mut worst = 0;
    for x in (0..g.order()).filter(|&x| g.element_order(x) == 4) {
        let dist = graph.distances_from(x).unwrap();
        let best = z
            .iter()
            .map(|&y| dist[graph.vertex_position(y).unwrap()])
            .min()
            .unwrap();
        worst = worst.max(best);
    }
    assert!(worst <= 3, "worst distance {worst}");
}

#[test]
fn eccentricity_depends_only_on_the_cyclic_subgroup() {
    for g in [witness(), common::load_corpus_group("paper-60")] {
        let graph = build_commuting_graph(&g);
        let d = graph.diameter();
        for &x in graph.vertices() {
            let ecc = d.eccentricities[graph.vertex_position(x).unwrap()];
            let o = g.element_order(x);
            for k in (2..o).filter(|&k| gcd(k, o) == 1) {
                let y = g.pow(x, k);
                assert_eq!(d.eccentricities[graph.vertex_position(y).unwrap()], ecc);
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
