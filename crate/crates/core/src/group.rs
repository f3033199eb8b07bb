//! Fully enumerated permutation groups with index-based arithmetic.
//!
//! Elements are listed breadth-first over right multiplication by the
//! generators, starting from the identity at index 0. Every index-valued
//! result elsewhere in the crate refers to this listing.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Default cap on the order of any group built by full enumeration.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// Groups up to this order get a dense multiplication table.
pub const TABLE_THRESHOLD: usize = 4096;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

/// Changes the process-wide order cap used by [`FiniteGroup::generate`].
pub fn set_max_order(cap: usize) {
    MAX_ORDER.store(cap, Ordering::Relaxed);
}

pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    generators: Vec<usize>,
    /// `(parent, generator slot)` of the breadth-first tree; the identity
    /// points at itself with slot `u32::MAX`.
    tree: Vec<(u32, u32)>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Enumerates the group generated by `gens` acting on `degree` points.
pub fn closure(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
    FiniteGroup::generate(degree, gens)
}

impl FiniteGroup {
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup> {
        Self::generate_with_cap(degree, gens, max_order())
    }

    pub fn generate_with_cap(
        degree: usize,
        gens: &[Permutation],
        cap: usize,
    ) -> Result<FiniteGroup> {
        if degree == 0 {
            return Err(GroupError::MalformedPermutation(
                "degree must be positive".into(),
            ));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::MalformedPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let k = gens.len();
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut tree = vec![(0u32, u32::MAX)];
        let mut right = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for (s, g) in gens.iter().enumerate() {
                let prod = elements[head].compose_unchecked(g);
                let idx = match index.get(&prod) {
                    Some(&i) => i,
                    None => {
                        let i = elements.len() as u32;
                        if elements.len() >= cap {
                            return Err(GroupError::GroupTooLarge { cap });
                        }
                        index.insert(prod.clone(), i);
                        elements.push(prod);
                        tree.push((head as u32, s as u32));
                        i
                    }
                };
                right.push(idx);
            }
            head += 1;
        }
        let generators = gens.iter().map(|g| index[g] as usize).collect();
        let n = elements.len();
        let table = (n <= TABLE_THRESHOLD).then(|| {
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                t[i * n] = i as u32;
                for j in 1..n {
                    let (parent, slot) = tree[j];
                    let via = t[i * n + parent as usize] as usize;
                    t[i * n + j] = right[via * k + slot as usize];
                }
            }
            t
        });
        let mut group = FiniteGroup {
            degree,
            elements,
            index,
            generators,
            tree,
            table,
            inverses: Vec::new(),
            orders: Vec::new(),
        };
        group.inverses = (0..n)
            .map(|i| group.index[&group.elements[i].inverse()])
            .collect();
        group.orders = (0..n)
            .map(|i| {
                let mut x = i;
                let mut o = 1;
                while x != 0 {
                    x = group.mul(x, i);
                    o += 1;
                }
                o
            })
            .collect();
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Index of a permutation in this group, if it is a member.
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect()
    }

    /// Breadth-first parent of element `i` and the generator slot used to
    /// reach it, or `None` for the identity.
    pub fn tree_parent(&self, i: usize) -> Option<(usize, usize)> {
        let (p, s) = self.tree[i];
        (s != u32::MAX).then_some((p as usize, s as usize))
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    /// Index of `elements[i] * elements[j]` (apply `i` first).
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.table {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.index[&self.elements[i].compose_unchecked(&self.elements[j])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    #[inline]
    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i] as u64
    }

    pub fn pow(&self, x: usize, e: u64) -> usize {
        let o = self.element_order(x);
        let mut e = e % o;
        let mut base = x;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let a = self.mul(self.inv(x), self.inv(y));
        self.mul(self.mul(a, x), y)
    }

    #[inline]
    pub fn commute(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    /// Prime divisors of the order, ascending.
    pub fn primes(&self) -> Vec<u64> {
        arith::prime_divisors(self.order() as u64)
    }

    /// The `p`-part of `x`: the unique `p`-element of `<x>` whose cofactor
    /// has order prime to `p` and multiplies back to `x`.
    pub fn p_part(&self, x: usize, p: u64) -> usize {
        let o = self.element_order(x);
        let pa = arith::p_power_part(o, p);
        if pa == 1 {
            return 0;
        }
        let m = o / pa;
        // e = 0 (mod m), e = 1 (mod p^a)
        let e = m * arith::mod_inverse(m % pa, pa).expect("coprime parts") % o;
        self.pow(x, e)
    }

    pub fn is_p_element(&self, x: usize, p: u64) -> bool {
        arith::is_p_power(self.element_order(x), p)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self, (0..self.order() as u32).collect(), self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(self, vec![0], Vec::new())
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        let mut chosen: Vec<usize> = Vec::new();
        let mut mask = FixedBitSet::with_capacity(self.order());
        mask.insert(0);
        let mut members = vec![0usize];
        for &g in gens {
            if mask.contains(g) {
                continue;
            }
            chosen.push(g);
            self.extend_closure(&mut mask, &mut members, &chosen);
        }
        let mut sorted: Vec<u32> = members.into_iter().map(|x| x as u32).collect();
        sorted.sort_unstable();
        Subgroup::from_sorted(self, sorted, chosen)
    }

    /// Subgroup with a known member set (must already be closed).
    pub fn subgroup_from_mask(&self, mask: &FixedBitSet) -> Subgroup {
        let cands: Vec<usize> = mask.ones().collect();
        let sub = self.subgroup(&cands);
        debug_assert_eq!(sub.order(), cands.len(), "member set is not a subgroup");
        sub
    }

    fn extend_closure(&self, mask: &mut FixedBitSet, members: &mut Vec<usize>, gens: &[usize]) {
        // Right-multiplying every member by every generator, breadth first,
        // from the existing members reaches the enlarged subgroup.
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !mask.contains(y) {
                    mask.insert(y);
                    members.push(y);
                }
            }
            head += 1;
        }
    }

    /// Element indices of the conjugacy class of `x`.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        seen.insert(x);
        let mut out = vec![x];
        let mut head = 0;
        while head < out.len() {
            let y = out[head];
            for &g in &self.generators {
                let z = self.conj(g, y);
                if !seen.contains(z) {
                    seen.insert(z);
                    out.push(z);
                }
            }
            head += 1;
        }
        out.sort_unstable();
        out
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut done = FixedBitSet::with_capacity(self.order());
        let mut out = Vec::new();
        for x in 0..self.order() {
            if done.contains(x) {
                continue;
            }
            let class = self.conjugacy_class(x);
            for &y in &class {
                done.insert(y);
            }
            out.push(class);
        }
        out
    }
}

/// A subgroup of a parent group, held as a sorted set of element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<u32>,
    mask: FixedBitSet,
    generators: Vec<usize>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.generators)
    }
}

impl Subgroup {
    fn from_sorted(parent: &FiniteGroup, members: Vec<u32>, generators: Vec<usize>) -> Self {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        for &m in &members {
            mask.insert(m as usize);
        }
        Subgroup {
            members,
            mask,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn members(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.members.iter().map(|&x| x as usize)
    }

    pub fn member_indices(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_abelian(&self, g: &FiniteGroup) -> bool {
        let gens = &self.generators;
        gens.iter().all(|&a| gens.iter().all(|&b| g.commute(a, b)))
    }

    /// `x H x^-1`, with conjugated generators.
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        let mut members: Vec<u32> = self.members().map(|m| g.conj(x, m) as u32).collect();
        members.sort_unstable();
        let gens = self.generators.iter().map(|&m| g.conj(x, m)).collect();
        Subgroup::from_sorted(g, members, gens)
    }

    pub fn intersection(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        g.subgroup_from_mask(&mask)
    }

    pub fn join(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        g.subgroup(&gens)
    }

    /// The product set `HK` as a bitset.
    pub fn product_set(&self, g: &FiniteGroup, other: &Subgroup) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(g.order());
        for a in self.members() {
            for b in other.members() {
                out.insert(g.mul(a, b));
            }
        }
        out
    }
}
