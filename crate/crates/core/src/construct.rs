//! Building new groups from old: quotients, products and affine groups.

use std::collections::HashMap;

use crate::error::{GroupError, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::Matrix;
use crate::perm::Permutation;

/// A quotient group together with the projection from the parent.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// `projection[x]` is the index in `group` of the coset containing `x`.
    pub projection: Vec<usize>,
}

impl Quotient {
    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, parent: &FiniteGroup, sub: &Subgroup) -> Subgroup {
        let mut mask = fixedbitset::FixedBitSet::with_capacity(parent.order());
        for (x, &q) in self.projection.iter().enumerate() {
            if sub.contains(q) {
                mask.insert(x);
            }
        }
        parent.subgroup_from_mask(&mask)
    }

    /// Image of a subgroup of the parent.
    pub fn image(&self, sub: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = sub.generators().iter().map(|&x| self.projection[x]).collect();
        self.group.subgroup(&gens)
    }
}

pub fn is_normal(g: &FiniteGroup, n: &Subgroup) -> bool {
    g.generators()
        .iter()
        .all(|&x| n.generators().iter().all(|&m| n.contains(g.conj(x, m))))
}

/// `G/N` realized as the right-regular permutation group on the cosets of `N`.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    if !is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for m in n.members() {
            coset_of[g.mul(m, x)] = c;
        }
    }
    let k = reps.len();
    let action = |y: usize| -> Permutation {
        Permutation::from_raw(reps.iter().map(|&r| coset_of[g.mul(r, y)] as u32).collect())
    };
    let gens: Vec<Permutation> = g.generators().iter().map(|&y| action(y)).collect();
    let q = FiniteGroup::generate(k, &gens)?;
    // Each coset acts as one permutation; look up its index once.
    let mut coset_index = vec![usize::MAX; k];
    for (c, &r) in reps.iter().enumerate() {
        coset_index[c] = q.index_of(&action(r)).ok_or(GroupError::NotNormal)?;
    }
    let projection = coset_of.iter().map(|&c| coset_index[c]).collect();
    Ok(Quotient {
        group: q,
        projection,
    })
}

/// Checks that `map` (an element permutation of `base`) is an automorphism.
pub fn is_automorphism(base: &FiniteGroup, map: &[u32]) -> bool {
    let n = base.order();
    if map.len() != n || map[0] != 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if (y as usize) >= n || std::mem::replace(&mut seen[y as usize], true) {
            return false;
        }
    }
    // A bijection that respects products with the generators respects all
    // products, since every element is a word in them.
    (0..n).all(|x| {
        base.generators().iter().all(|&s| {
            map[base.mul(x, s)] as usize == base.mul(map[x] as usize, map[s] as usize)
        })
    })
}

/// Extends generator images of an action along the breadth-first tree of
/// `actor`. `images[s]` is the automorphism assigned to generator slot `s`.
///
/// Convention: `action(xy) = action(x) after action(y)`, i.e.
/// `action(xy)[b] = action(x)[action(y)[b]]`.
pub fn action_from_generator_images(
    actor: &FiniteGroup,
    images: &[Vec<u32>],
) -> Result<Vec<Vec<u32>>> {
    if images.len() != actor.generators().len() {
        return Err(GroupError::InvalidAction(format!(
            "{} generator images for {} generators",
            images.len(),
            actor.generators().len()
        )));
    }
    let base_order = images.first().map_or(0, |m| m.len());
    let mut action: Vec<Vec<u32>> = Vec::with_capacity(actor.order());
    action.push((0..base_order as u32).collect());
    for a in 1..actor.order() {
        let (parent, slot) = actor.tree_parent(a).expect("non-identity has a parent");
        let gen_map = &images[slot];
        let next = action[parent]
            .iter()
            .enumerate()
            .map(|(b, _)| action[parent][gen_map[b] as usize])
            .collect();
        action.push(next);
    }
    Ok(action)
}

/// Semidirect product `base ⋊ actor` with
/// `(b1, a1)(b2, a2) = (b1 · action(a1)(b2), a1 a2)`, realized on
/// `|base|·|actor|` points by the right-regular representation.
pub fn semidirect_product(
    base: &FiniteGroup,
    actor: &FiniteGroup,
    action: &[Vec<u32>],
) -> Result<FiniteGroup> {
    let nb = base.order();
    let na = actor.order();
    if action.len() != na {
        return Err(GroupError::InvalidAction(format!(
            "action has {} entries for an actor of order {na}",
            action.len()
        )));
    }
    for (a, map) in action.iter().enumerate() {
        if !is_automorphism(base, map) {
            return Err(GroupError::InvalidAction(format!(
                "image of actor element {a} is not an automorphism"
            )));
        }
    }
    for a1 in 0..na {
        for a2 in 0..na {
            let prod = &action[actor.mul(a1, a2)];
            let ok = (0..nb).all(|b| prod[b] == action[a1][action[a2][b] as usize]);
            if !ok {
                return Err(GroupError::InvalidAction(format!(
                    "action is not a homomorphism at ({a1}, {a2})"
                )));
            }
        }
    }
    let point = |b: usize, a: usize| (b * na + a) as u32;
    let right_mul = |b2: usize, a2: usize| -> Permutation {
        let mut images = vec![0u32; nb * na];
        for b1 in 0..nb {
            for a1 in 0..na {
                let b = base.mul(b1, action[a1][b2] as usize);
                images[point(b1, a1) as usize] = point(b, actor.mul(a1, a2));
            }
        }
        Permutation::from_raw(images)
    };
    let mut gens = Vec::new();
    for &b in base.generators() {
        gens.push(right_mul(b, 0));
    }
    for &a in actor.generators() {
        gens.push(right_mul(0, a));
    }
    FiniteGroup::generate(nb * na, &gens)
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for p in a.generator_perms() {
        let mut im: Vec<u32> = p.images().to_vec();
        im.extend((da..da + db).map(|x| x as u32));
        gens.push(Permutation::from_raw(im));
    }
    for p in b.generator_perms() {
        let mut im: Vec<u32> = (0..da as u32).collect();
        im.extend(p.images().iter().map(|&x| x + da as u32));
        gens.push(Permutation::from_raw(im));
    }
    FiniteGroup::generate(da + db, &gens)
}

pub fn direct_product_all(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    let mut it = factors.iter();
    let first = it
        .next()
        .ok_or_else(|| GroupError::FormatError("empty product".into()))?
        .clone();
    it.try_fold(first, |acc, f| direct_product(&acc, f))
}

/// Affine group on `GF(p)^k` generated by all translations and the given
/// linear maps, acting on the `p^k` vectors (indexed in base `p`).
pub fn affine_group(p: u64, k: usize, linear: &[Matrix]) -> Result<FiniteGroup> {
    let n = (p as usize).pow(k as u32);
    let vec_of = |mut i: usize| -> Vec<u64> {
        (0..k)
            .map(|_| {
                let d = i % p as usize;
                i /= p as usize;
                d as u64
            })
            .collect()
    };
    let index_of = |v: &[u64]| -> usize { v.iter().rev().fold(0, |acc, &d| acc * p as usize + d as usize) };
    let mut gens = Vec::new();
    for axis in 0..k {
        let images: Vec<u32> = (0..n)
            .map(|i| {
                let mut v = vec_of(i);
                v[axis] = (v[axis] + 1) % p;
                index_of(&v) as u32
            })
            .collect();
        gens.push(Permutation::from_raw(images));
    }
    for m in linear {
        if m.dim() != k || m.modulus() != p {
            return Err(GroupError::InvalidAction("matrix shape mismatch".into()));
        }
        let images: Vec<u32> = (0..n)
            .map(|i| index_of(&m.apply(&vec_of(i))) as u32)
            .collect();
        gens.push(Permutation::from_images(&images).map_err(|_| {
            GroupError::InvalidAction("linear map is not invertible".into())
        })?);
    }
    FiniteGroup::generate(n, &gens)
}

/// Rebuilds `g` from the element permutations of a subgroup, giving a
/// standalone group and the embedding of its indices into `g`.
pub fn subgroup_as_group(g: &FiniteGroup, h: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
    let gens: Vec<Permutation> = h.generators().iter().map(|&x| g.element(x).clone()).collect();
    let sub = FiniteGroup::generate(g.degree(), &gens)?;
    let lookup: HashMap<&Permutation, usize> =
        h.members().map(|x| (g.element(x), x)).collect();
    let embedding = sub.elements().iter().map(|p| lookup[p]).collect();
    Ok((sub, embedding))
}
