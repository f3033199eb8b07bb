//! Classifies groups as Frobenius, 2-Frobenius or neither, and reports
//! whether the diameter hypothesis (A-group, trivial center) holds.

use agc::classify::classify;
use agc::construct::direct_product;
use agc::families::{affine_s3_on_25, alternating, metacyclic, quaternion, symmetric};

fn main() -> agc::Result<()> {
    let groups = [
        ("S3", symmetric(3)),
        ("A4", alternating(4)),
        ("S4", symmetric(4)),
        ("Q8", quaternion()),
        ("F20", metacyclic(5, 4)),
        ("GF(25):S3", affine_s3_on_25()),
        ("F21 x S3", direct_product(&metacyclic(7, 3), &symmetric(3))?),
    ];
    println!("{:<10} {:>5} {:>7} {:>9} {:>11} {:>10}", "group", "order", "A-group", "Frobenius", "2-Frobenius", "hypothesis");
    for (name, g) in &groups {
        let c = classify(g);
        println!(
            "{name:<10} {:>5} {:>7} {:>9} {:>11} {:>10}",
            c.order,
            c.a_group,
            c.frobenius(),
            c.two_frobenius(),
            c.hypothesis
        );
        if let Some(k) = &c.frobenius_kernel {
            println!("{:>10} kernel of order {}", "", k.order());
        }
        if let Some((k, l)) = &c.two_frobenius_pair {
            println!("{:>10} normal pair of orders {} < {}", "", k.order(), l.order());
        }
    }
    Ok(())
}
