//! Runs both witness searches and prints every candidate with its
//! fingerprint.

use agc::witness::{excluded_bases_125, search_paper_1500, search_paper_60, fingerprint};

fn main() {
    println!("order 60: split extensions of abelian groups");
    for (k, hit) in search_paper_60().iter().enumerate() {
        println!("  hit {k}: {}", hit.fingerprint);
        println!("    {}", serde_json::to_string(&hit.recipe).unwrap());
    }

    println!("order 1500: abelian bases of order 125");
    for (factors, aut) in excluded_bases_125() {
        println!("  {factors:?}: |Aut| = {aut}, no element of order 3");
    }
    let (built, chosen) = search_paper_1500();
    for (k, (cand, g)) in built.iter().enumerate() {
        let mark = if Some(k) == chosen { "*" } else { " " };
        println!(
            " {mark} lambda {} nu {}: {}",
            cand.lambda,
            cand.nu,
            fingerprint(g)
        );
    }
}
