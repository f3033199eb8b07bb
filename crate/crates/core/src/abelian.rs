//! Finite abelian groups in primary form, with brute-force automorphism and
//! action enumeration. Used by the witness searches.

use crate::arith;
use crate::families;
use crate::group::FiniteGroup;

/// All abelian groups of order `n`, each as its list of prime-power cyclic
/// factors (primes ascending, exponents descending within a prime).
pub fn abelian_group_types(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in arith::factorize(n as u64) {
        let mut next = Vec::new();
        for prefix in &out {
            for part in partitions(e as usize, e as usize) {
                let mut t = prefix.clone();
                t.extend(part.iter().map(|&k| (p as usize).pow(k as u32)));
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Partitions of `n` into parts of size at most `max`, parts descending.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `C_{m1} x C_{m2} x ...` with one generator per factor, so that every
/// element has coordinates `(c_1, c_2, ...)`, `0 <= c_i < m_i`.
#[derive(Debug, Clone)]
pub struct AbelianGroup {
    pub group: FiniteGroup,
    pub factors: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(factors: &[usize]) -> Self {
        let factors: Vec<usize> = factors.iter().copied().filter(|&m| m > 1).collect();
        AbelianGroup {
            group: families::abelian(&factors),
            factors,
        }
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Image table of the homomorphism sending generator `i` to `images[i]`.
    /// The caller guarantees `images[i]` has order dividing `factors[i]`.
    pub fn extend_hom(&self, target: &FiniteGroup, images: &[usize]) -> Vec<u32> {
        let g = &self.group;
        let mut map = vec![0u32; g.order()];
        for x in 1..g.order() {
            let (parent, slot) = g.tree_parent(x).expect("non-identity");
            map[x] = target.mul(map[parent] as usize, images[slot]) as u32;
        }
        map
    }

    /// Coordinates of every element with respect to the factor generators.
    pub fn coordinates(&self) -> Vec<Vec<usize>> {
        let g = &self.group;
        let mut coords = vec![vec![0usize; self.rank()]; g.order()];
        for x in 1..g.order() {
            let (parent, slot) = g.tree_parent(x).expect("non-identity");
            let mut c = coords[parent].clone();
            c[slot] = (c[slot] + 1) % self.factors[slot];
            coords[x] = c;
        }
        coords
    }

    /// Calls `visit` on every automorphism, given as an element permutation,
    /// in lexicographic order of the tuple of generator images.
    pub fn for_each_automorphism(&self, mut visit: impl FnMut(&[u32])) {
        let g = &self.group;
        if self.rank() == 0 {
            visit(&[0]);
            return;
        }
        let candidates: Vec<Vec<usize>> = self
            .factors
            .iter()
            .map(|&m| {
                (0..g.order())
                    .filter(|&y| g.element_order(y) == m as u64)
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; self.rank()];
        let mut seen = vec![false; g.order()];
        'outer: loop {
            let images: Vec<usize> = choice
                .iter()
                .zip(&candidates)
                .map(|(&c, cands)| cands[c])
                .collect();
            let map = self.extend_hom(g, &images);
            seen.iter_mut().for_each(|s| *s = false);
            if map.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true)) {
                visit(&map);
            }
            for k in (0..choice.len()).rev() {
                choice[k] += 1;
                if choice[k] < candidates[k].len() {
                    continue 'outer;
                }
                choice[k] = 0;
            }
            break;
        }
    }

    pub fn automorphisms(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        self.for_each_automorphism(|m| out.push(m.to_vec()));
        out
    }

    pub fn automorphism_count(&self) -> usize {
        let mut n = 0;
        self.for_each_automorphism(|_| n += 1);
        n
    }
}

pub fn compose_maps(outer: &[u32], inner: &[u32]) -> Vec<u32> {
    inner.iter().map(|&b| outer[b as usize]).collect()
}

pub fn map_power(map: &[u32], e: usize) -> Vec<u32> {
    let mut acc: Vec<u32> = (0..map.len() as u32).collect();
    for _ in 0..e {
        acc = compose_maps(map, &acc);
    }
    acc
}

fn is_identity_map(map: &[u32]) -> bool {
    map.iter().enumerate().all(|(i, &y)| i == y as usize)
}

/// Nontrivial actions of an abelian `actor` on `base` through the given
/// automorphisms: tuples of pairwise commuting automorphisms whose orders
/// divide the actor's factor orders. Each tuple lists generator images.
pub fn abelian_actions(actor: &AbelianGroup, auts: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    let per_slot: Vec<Vec<usize>> = actor
        .factors
        .iter()
        .map(|&m| {
            (0..auts.len())
                .filter(|&i| is_identity_map(&map_power(&auts[i], m)))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(
        slot: usize,
        per_slot: &[Vec<usize>],
        auts: &[Vec<u32>],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if slot == per_slot.len() {
            if stack.iter().any(|&i| !is_identity_map(&auts[i])) {
                out.push(stack.iter().map(|&i| auts[i].clone()).collect());
            }
            return;
        }
        for &i in &per_slot[slot] {
            let commutes = stack.iter().all(|&j| {
                compose_maps(&auts[i], &auts[j]) == compose_maps(&auts[j], &auts[i])
            });
            if commutes {
                stack.push(i);
                rec(slot + 1, per_slot, auts, stack, out);
                stack.pop();
            }
        }
    }
    rec(0, &per_slot, auts, &mut stack, &mut out);
    out
}
