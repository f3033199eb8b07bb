//! Standard small groups as permutation groups.
//!
//! These panic only on internal inconsistencies: every constructor here is
//! well inside the default order cap.

use crate::arith;
use crate::construct::{action_from_generator_images, affine_group, semidirect_product};
use crate::group::FiniteGroup;
use crate::linalg::Matrix;
use crate::perm::Permutation;

fn cycle_perm(n: usize) -> Permutation {
    Permutation::from_raw((0..n as u32).map(|i| (i + 1) % n as u32).collect())
}

pub fn cyclic(n: usize) -> FiniteGroup {
    if n == 1 {
        return FiniteGroup::generate(1, &[]).expect("trivial group");
    }
    FiniteGroup::generate(n, &[cycle_perm(n)]).expect("cyclic group")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    if n < 2 {
        return FiniteGroup::generate(1, &[]).expect("trivial group");
    }
    let t = Permutation::from_cycles(n, &[&[0, 1]]).expect("transposition");
    FiniteGroup::generate(n, &[t, cycle_perm(n)]).expect("symmetric group")
}

pub fn alternating(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let three = Permutation::from_cycles(n, &[&[0, 1, 2]]).expect("3-cycle");
    let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
    let long = Permutation::from_cycles(n, &[&long]).expect("long cycle");
    FiniteGroup::generate(n, &[three, long]).expect("alternating group")
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> FiniteGroup {
    let refl = Permutation::from_raw((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
    FiniteGroup::generate(n, &[cycle_perm(n), refl]).expect("dihedral group")
}

/// Quaternion group of order 8, regular on 8 points.
pub fn quaternion() -> FiniteGroup {
    let i = Permutation::from_cycles(8, &[&[0, 1, 3, 6], &[2, 5, 7, 4]]).expect("i");
    let j = Permutation::from_cycles(8, &[&[0, 2, 3, 7], &[1, 4, 6, 5]]).expect("j");
    FiniteGroup::generate(8, &[i, j]).expect("quaternion group")
}

/// `C_p ⋊ C_m` for `m | p - 1`: the maps `x -> a x + b` on `GF(p)` with `a`
/// in the order-`m` subgroup of units. Frobenius whenever `m > 1`.
pub fn metacyclic(p: usize, m: usize) -> FiniteGroup {
    assert!(arith::is_prime(p as u64) && (p - 1) % m == 0);
    let root = arith::primitive_root(p as u64);
    let r = mod_pow(root, ((p - 1) / m) as u64, p as u64);
    affine_group(p as u64, 1, &[Matrix::new(p as u64, &[&[r]])]).expect("metacyclic group")
}

/// Abelian group `C_{n1} x C_{n2} x ...`, one generator per factor.
pub fn abelian(factors: &[usize]) -> FiniteGroup {
    let total: usize = factors.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &f in factors {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for i in 0..f {
            images[offset + i] = (offset + (i + 1) % f) as u32;
        }
        offset += f;
        gens.push(Permutation::from_raw(images));
    }
    FiniteGroup::generate(total.max(1), &gens).expect("abelian group")
}

/// Dicyclic group `C_n ⋊ C_4` with the order-4 generator inverting `C_n`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let cn = cyclic(n);
    let c4 = cyclic(4);
    let inversion: Vec<u32> = (0..cn.order()).map(|x| cn.inv(x) as u32).collect();
    let action = action_from_generator_images(&c4, &[inversion]).expect("action");
    semidirect_product(&cn, &c4, &action).expect("dicyclic group")
}

/// `AΓL(1, 8) = GF(8) ⋊ (C_7 ⋊ C_3)`, order 168.
pub fn affine_semilinear_8() -> FiniteGroup {
    // GF(8) = GF(2)[x]/(x^3 + x + 1), basis 1, x, x^2 (columns are images)
    let mult_x = Matrix::new(2, &[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]]);
    let frobenius = Matrix::new(2, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 1]]);
    affine_group(2, 3, &[mult_x, frobenius]).expect("affine semilinear group")
}

/// `GF(5)^2 ⋊ S_3` with the order-3 element acting fixed-point-freely.
pub fn affine_s3_on_25() -> FiniteGroup {
    let c = Matrix::new(5, &[&[0, 4], &[1, 4]]);
    let t = Matrix::new(5, &[&[0, 1], &[1, 0]]);
    affine_group(5, 2, &[c, t]).expect("affine group of order 150")
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut base = b % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}
