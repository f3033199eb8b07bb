//! Group-class predicates: A-groups, Frobenius and 2-Frobenius groups, and
//! the hypothesis under which the commuting-graph diameter bounds hold.

use serde::Serialize;

use crate::arith;
use crate::construct::quotient;
use crate::error::{GroupError, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::structure::{
    center, derived_series, fitting_subgroup, normal_subgroups,
    second_fitting_preimage, sylow_subgroup,
};

/// Every Sylow subgroup is abelian.
pub fn is_a_group(g: &FiniteGroup) -> bool {
    g.primes().into_iter().all(|p| {
        sylow_subgroup(g, p)
            .expect("p divides |G|")
            .is_abelian(g)
    })
}

pub fn is_solvable(g: &FiniteGroup) -> bool {
    derived_series(g).is_solvable()
}

/// `1 < kernel < within` and the centralizer in `within` of every
/// nontrivial kernel element stays inside the kernel.
pub fn is_frobenius_with_kernel_in(g: &FiniteGroup, within: &Subgroup, kernel: &Subgroup) -> bool {
    if kernel.is_trivial() || kernel.order() >= within.order() || !kernel.is_subset_of(within) {
        return false;
    }
    kernel.members().skip(1).all(|k| {
        within
            .members()
            .all(|y| !g.commute(k, y) || kernel.contains(y))
    })
}

/// Frobenius test for solvable groups, with the Fitting subgroup as the
/// only kernel candidate. Returns the kernel when `G` is Frobenius.
///
/// If `C_G(f) <= F` for all nontrivial `f` in `F`, no prime divides both
/// `|F|` and `|G:F|` (a central element of a Sylow subgroup lying in `F`
/// would be centralized by the whole Sylow), so `F` is a normal Hall
/// subgroup with a complement and the group is Frobenius with kernel `F`.
pub fn is_frobenius(g: &FiniteGroup) -> Result<Option<Subgroup>> {
    if !is_solvable(g) {
        return Err(GroupError::NotSolvable);
    }
    let f = fitting_subgroup(g);
    Ok(is_frobenius_with_kernel_in(g, &g.whole(), &f).then_some(f))
}

/// Whether `(kernel, upper)` is a 2-Frobenius pair: `upper` is Frobenius
/// with kernel `kernel`, and `G/kernel` is Frobenius with kernel
/// `upper/kernel`.
pub fn is_two_frobenius_pair(g: &FiniteGroup, kernel: &Subgroup, upper: &Subgroup) -> bool {
    if !is_frobenius_with_kernel_in(g, upper, kernel) {
        return false;
    }
    let Ok(q) = quotient(g, kernel) else {
        return false;
    };
    let top = q.image(upper);
    is_frobenius_with_kernel_in(&q.group, &q.group.whole(), &top)
}

/// 2-Frobenius test: first the pair `(F, J)`, then every pair of normal
/// subgroups `K < H`.
pub fn is_two_frobenius(g: &FiniteGroup) -> Result<Option<(Subgroup, Subgroup)>> {
    if !is_solvable(g) {
        return Err(GroupError::NotSolvable);
    }
    let f = fitting_subgroup(g);
    let j = second_fitting_preimage(g);
    if is_two_frobenius_pair(g, &f, &j) {
        return Ok(Some((f, j)));
    }
    let normals: Vec<Subgroup> = normal_subgroups(g).into_iter().map(|n| n.subgroup).collect();
    for k in &normals {
        if k.is_trivial() {
            continue;
        }
        for h in &normals {
            if h.order() > k.order() && h.order() < g.order() && k.is_subset_of(h)
                && is_two_frobenius_pair(g, k, h)
            {
                return Ok(Some((k.clone(), h.clone())));
            }
        }
    }
    Ok(None)
}

/// Whether `h ∩ y h y^-1 = 1` for every `y` outside `h`.
pub fn is_malnormal(g: &FiniteGroup, h: &Subgroup) -> bool {
    (0..g.order())
        .filter(|&y| !h.contains(y))
        .all(|y| h.members().skip(1).all(|x| !h.contains(g.conj(y, x))))
}

/// Searches for a malnormal subgroup `1 < H < G`, independently of any
/// Fitting-subgroup machinery.
///
/// A malnormal `H` containing `x` must contain every `y` with
/// `K ∩ yKy^-1 != 1` for any `K <= H` containing `x`. Starting from `<x>`
/// and adjoining all such `y` until nothing changes therefore either
/// reaches a malnormal subgroup or proves none contains `x`. One `x` of
/// prime order per conjugacy class suffices, since any malnormal subgroup
/// contains such an element and conjugates of malnormal subgroups are
/// malnormal.
pub fn malnormal_complement(g: &FiniteGroup) -> Option<Subgroup> {
    for class in g.conjugacy_classes() {
        let x = class[0];
        if x == 0 || !arith::is_prime(g.element_order(x)) {
            continue;
        }
        let mut h = g.subgroup(&[x]);
        loop {
            if h.order() == g.order() {
                break;
            }
            let forced: Vec<usize> = (0..g.order())
                .filter(|&y| !h.contains(y))
                .filter(|&y| h.members().skip(1).any(|m| h.contains(g.conj(y, m))))
                .collect();
            if forced.is_empty() {
                return Some(h);
            }
            let mut gens = h.generators().to_vec();
            gens.extend(forced);
            h = g.subgroup(&gens);
        }
    }
    None
}

/// Frobenius by the malnormal-complement definition.
pub fn is_frobenius_by_complement(g: &FiniteGroup) -> bool {
    malnormal_complement(g).is_some()
}

/// Solvable, nonabelian A-group whose central quotient is neither Frobenius
/// nor 2-Frobenius.
pub fn satisfies_hypothesis(g: &FiniteGroup) -> bool {
    if g.is_abelian() || !is_solvable(g) || !is_a_group(g) {
        return false;
    }
    let z = center(g);
    let owned;
    let q = if z.is_trivial() {
        g
    } else {
        owned = quotient(g, &z).expect("center is normal").group;
        &owned
    };
    matches!(is_frobenius(q), Ok(None)) && matches!(is_two_frobenius(q), Ok(None))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorollaryClass {
    TwoPrimeOrder,
    CubeFreeOdd,
    None,
}

impl CorollaryClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CorollaryClass::TwoPrimeOrder => "two-prime-order",
            CorollaryClass::CubeFreeOdd => "cube-free-odd",
            CorollaryClass::None => "none",
        }
    }
}

pub fn is_two_prime_order(order: usize) -> bool {
    arith::prime_divisors(order as u64).len() == 2
}

pub fn is_cube_free_odd(order: usize) -> bool {
    order % 2 == 1 && arith::factorize(order as u64).iter().all(|&(_, e)| e < 3)
}

/// Two-prime order takes precedence over cube-free odd order.
pub fn corollary_class(order: usize) -> CorollaryClass {
    if is_two_prime_order(order) {
        CorollaryClass::TwoPrimeOrder
    } else if is_cube_free_odd(order) {
        CorollaryClass::CubeFreeOdd
    } else {
        CorollaryClass::None
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub order: usize,
    pub solvable: bool,
    pub a_group: bool,
    pub derived_length: Option<usize>,
    pub center_order: usize,
    pub frobenius_kernel: Option<Subgroup>,
    pub two_frobenius_pair: Option<(Subgroup, Subgroup)>,
    pub hypothesis: bool,
    pub corollary_class: CorollaryClass,
    pub two_prime_order: bool,
    pub cube_free_odd: bool,
}

impl Classification {
    pub fn frobenius(&self) -> bool {
        self.frobenius_kernel.is_some()
    }

    pub fn two_frobenius(&self) -> bool {
        self.two_frobenius_pair.is_some()
    }
}

pub fn classify(g: &FiniteGroup) -> Classification {
    let series = derived_series(g);
    let solvable = series.is_solvable();
    let (frobenius_kernel, two_frobenius_pair) = if solvable {
        (
            is_frobenius(g).expect("solvable"),
            is_two_frobenius(g).expect("solvable"),
        )
    } else {
        (None, None)
    };
    Classification {
        order: g.order(),
        solvable,
        a_group: is_a_group(g),
        derived_length: series.derived_length,
        center_order: center(g).order(),
        frobenius_kernel,
        two_frobenius_pair,
        hypothesis: satisfies_hypothesis(g),
        corollary_class: corollary_class(g.order()),
        two_prime_order: is_two_prime_order(g.order()),
        cube_free_odd: is_cube_free_odd(g.order()),
    }
}

/// Whether `x` commutes with no nontrivial element of `on`.
pub fn acts_fixed_point_freely(g: &FiniteGroup, x: usize, on: &Subgroup) -> bool {
    on.members().skip(1).all(|v| !g.commute(x, v))
}
