//! Builds groups from permutations, products, semidirect products and
//! quotients, and prints a few invariants of each.

use agc::construct::{direct_product, quotient};
use agc::families::{dihedral, metacyclic, symmetric};
use agc::structure::{center, derived_series};
use agc::{FiniteGroup, Permutation};

fn describe(name: &str, g: &FiniteGroup) {
    let series = derived_series(g);
    println!(
        "{name:<10} order {:>4}  degree {:>3}  |Z| {:>2}  derived orders {:?}",
        g.order(),
        g.degree(),
        center(g).order(),
        series.orders()
    );
}

fn main() -> agc::Result<()> {
    // S_4 from a 4-cycle and a transposition; products compose left to right
    let a = Permutation::from_cycles(4, &[&[0, 1, 2, 3]])?;
    let b = Permutation::from_cycles(4, &[&[0, 1]])?;
    println!("a = {a}, b = {b}, ab = {}", a.compose(&b)?);
    let s4 = FiniteGroup::generate(4, &[a, b])?;
    describe("S4", &s4);

    let f21 = metacyclic(7, 3);
    describe("F21", &f21);
    let p = direct_product(&f21, &symmetric(3))?;
    describe("F21 x S3", &p);

    let d10 = dihedral(5);
    describe("D10", &d10);

    let klein = derived_series(&s4).term(2).clone();
    let q = quotient(&s4, &klein)?;
    describe("S4 / V4", &q.group);
    Ok(())
}
