//! Subgroup structure: centralizers, derived series, Sylow subgroups and
//! systems, Fitting subgroups, system normalizers and normal subgroups.
//!
//! Most operations come in two forms: one on the whole group and an `_in`
//! variant that works inside a subgroup `within` of the same parent, so that
//! terms of the derived series can be studied without re-indexing.

use std::collections::{BTreeMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::construct::quotient;
use crate::error::{GroupError, Result};
use crate::group::{FiniteGroup, Subgroup};

pub fn centralizer(g: &FiniteGroup, x: usize) -> Subgroup {
    centralizer_in(g, &g.whole(), x)
}

pub fn centralizer_in(g: &FiniteGroup, within: &Subgroup, x: usize) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for y in within.members() {
        if g.commute(x, y) {
            mask.insert(y);
        }
    }
    g.subgroup_from_mask(&mask)
}

/// Elements of `within` commuting with every element of `sub`.
pub fn centralizer_of_subgroup(g: &FiniteGroup, within: &Subgroup, sub: &Subgroup) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for y in within.members() {
        if sub.generators().iter().all(|&s| g.commute(s, y)) {
            mask.insert(y);
        }
    }
    g.subgroup_from_mask(&mask)
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    center_in(g, &g.whole())
}

pub fn center_in(g: &FiniteGroup, within: &Subgroup) -> Subgroup {
    centralizer_of_subgroup(g, within, within)
}

pub fn normalizer_in(g: &FiniteGroup, within: &Subgroup, h: &Subgroup) -> Subgroup {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for y in within.members() {
        if h.generators().iter().all(|&s| h.contains(g.conj(y, s))) {
            mask.insert(y);
        }
    }
    g.subgroup_from_mask(&mask)
}

pub fn is_normal_in(g: &FiniteGroup, within: &Subgroup, h: &Subgroup) -> bool {
    within
        .generators()
        .iter()
        .all(|&y| h.generators().iter().all(|&s| h.contains(g.conj(y, s))))
}

/// Derived subgroup of `h`, generated by the commutators `[s, m]` of
/// generators `s` with members `m`; that set is already normal in `h`.
pub fn derived_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut comms = Vec::new();
    for &s in h.generators() {
        for m in h.members() {
            let c = g.commutator(s, m);
            if !seen.contains(c) {
                seen.insert(c);
                comms.push(c);
            }
        }
    }
    g.subgroup(&comms)
}

#[derive(Debug, Clone)]
pub struct DerivedSeries {
    /// `terms[0] = G`, each next term the derived subgroup of the previous,
    /// stopping once a term repeats.
    pub terms: Vec<Subgroup>,
    /// Smallest `n` with `terms[n]` trivial; `None` when not solvable.
    pub derived_length: Option<usize>,
}

impl DerivedSeries {
    pub fn is_solvable(&self) -> bool {
        self.derived_length.is_some()
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    /// `G^(i)`; indices past the end give the last (stable) term.
    pub fn term(&self, i: usize) -> &Subgroup {
        &self.terms[i.min(self.terms.len() - 1)]
    }
}

pub fn derived_series(g: &FiniteGroup) -> DerivedSeries {
    derived_series_of(g, &g.whole())
}

pub fn derived_series_of(g: &FiniteGroup, h: &Subgroup) -> DerivedSeries {
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_trivial() {
            let n = terms.len() - 1;
            return DerivedSeries {
                terms,
                derived_length: Some(n),
            };
        }
        let next = derived_subgroup(g, last);
        if next.order() == last.order() {
            return DerivedSeries {
                terms,
                derived_length: None,
            };
        }
        terms.push(next);
    }
}

pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    sylow_subgroup_in(g, &g.whole(), p)
}

/// Sylow `p`-subgroup of `within`, grown from a cyclic `p`-subgroup by
/// repeatedly adjoining a `p`-element of its normalizer.
pub fn sylow_subgroup_in(g: &FiniteGroup, within: &Subgroup, p: u64) -> Result<Subgroup> {
    let target = arith::p_power_part(within.order() as u64, p) as usize;
    if target == 1 || !arith::is_prime(p) {
        return Err(GroupError::PrimeNotDividing {
            prime: p,
            order: within.order(),
        });
    }
    let start = within
        .members()
        .find(|&x| g.element_order(x) == p)
        .expect("Cauchy: an element of order p exists");
    let mut sylow = g.subgroup(&[start]);
    while sylow.order() < target {
        let norm = normalizer_in(g, within, &sylow);
        let y = norm
            .members()
            .find(|&y| !sylow.contains(y) && g.is_p_element(y, p))
            .expect("a proper p-subgroup has a p-element in its normalizer outside it");
        let mut gens = sylow.generators().to_vec();
        gens.push(y);
        sylow = g.subgroup(&gens);
    }
    Ok(sylow)
}

/// Distinct conjugates of `h` under `within`, in order of first discovery.
pub fn conjugates_in(g: &FiniteGroup, within: &Subgroup, h: &Subgroup) -> Vec<Subgroup> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut out = Vec::new();
    for y in within.members() {
        let c = h.conjugate(g, y);
        if seen.insert(c.mask().clone()) {
            out.push(c);
        }
    }
    out
}

/// `O_p(within)`: the intersection of the conjugates of a Sylow
/// `p`-subgroup.
pub fn p_core_in(g: &FiniteGroup, within: &Subgroup, p: u64) -> Subgroup {
    let Ok(sylow) = sylow_subgroup_in(g, within, p) else {
        return g.trivial();
    };
    let mut mask = FixedBitSet::with_capacity(g.order());
    for x in sylow.members() {
        if within.members().all(|y| sylow.contains(g.conj(y, x))) {
            mask.insert(x);
        }
    }
    g.subgroup_from_mask(&mask)
}

pub fn fitting_subgroup(g: &FiniteGroup) -> Subgroup {
    fitting_in(g, &g.whole())
}

/// Product of `O_p(within)` over the primes dividing `|within|`.
pub fn fitting_in(g: &FiniteGroup, within: &Subgroup) -> Subgroup {
    let mut gens = Vec::new();
    let mut expected = 1;
    for p in arith::prime_divisors(within.order() as u64) {
        let core = p_core_in(g, within, p);
        expected *= core.order();
        gens.extend_from_slice(core.generators());
    }
    let f = g.subgroup(&gens);
    debug_assert_eq!(f.order(), expected, "Fitting subgroup is a direct product of p-cores");
    debug_assert!(is_normal_in(g, within, &f));
    f
}

/// Nilpotent iff every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup, h: &Subgroup) -> bool {
    arith::prime_divisors(h.order() as u64).into_iter().all(|p| {
        let s = sylow_subgroup_in(g, h, p).expect("p divides |h|");
        is_normal_in(g, h, &s)
    })
}

/// Preimage of `F(G/F(G))`.
pub fn second_fitting_preimage(g: &FiniteGroup) -> Subgroup {
    let f = fitting_subgroup(g);
    if f.order() == g.order() {
        return g.whole();
    }
    let q = quotient(g, &f).expect("Fitting subgroup is normal");
    let fq = fitting_subgroup(&q.group);
    q.preimage(g, &fq)
}

pub fn is_hall(h: &Subgroup, within_order: usize) -> bool {
    let n = h.order() as u64;
    arith::gcd(n, within_order as u64 / n) == 1
}

/// Whether `AB = BA` as sets.
pub fn permutable(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> bool {
    a.product_set(g, b) == b.product_set(g, a)
}

/// One Sylow subgroup per prime dividing the order, pairwise permutable.
#[derive(Debug, Clone)]
pub struct SylowSystem {
    pub sylows: BTreeMap<u64, Subgroup>,
}

impl SylowSystem {
    pub fn primes(&self) -> Vec<u64> {
        self.sylows.keys().copied().collect()
    }

    /// Product of the system's Sylow subgroups for the given primes.
    pub fn hall(&self, g: &FiniteGroup, primes: &[u64]) -> Subgroup {
        let gens: Vec<usize> = self
            .sylows
            .iter()
            .filter(|(p, _)| primes.contains(p))
            .flat_map(|(_, s)| s.generators().iter().copied())
            .collect();
        g.subgroup(&gens)
    }

    pub fn describe(&self) -> Vec<(u64, usize, Vec<usize>)> {
        self.sylows
            .iter()
            .map(|(&p, s)| (p, s.order(), s.generators().to_vec()))
            .collect()
    }
}

pub fn sylow_system(g: &FiniteGroup) -> Result<SylowSystem> {
    sylow_system_in(g, &g.whole())
}

/// The canonical Sylow system of `within`: the first one found by
/// depth-first search over conjugates, primes ordered by descending Sylow
/// order.
pub fn sylow_system_in(g: &FiniteGroup, within: &Subgroup) -> Result<SylowSystem> {
    let mut found = sylow_systems_in(g, within, 1)?;
    Ok(found
        .pop()
        .expect("solvable groups have Sylow systems; none found is a defect"))
}

/// Up to `limit` Sylow systems of `within`, in search order.
pub fn sylow_systems_in(
    g: &FiniteGroup,
    within: &Subgroup,
    limit: usize,
) -> Result<Vec<SylowSystem>> {
    if !derived_series_of(g, within).is_solvable() {
        return Err(GroupError::NotSolvable);
    }
    let order = within.order() as u64;
    let mut primes = arith::prime_divisors(order);
    primes.sort_by_key(|&p| (std::cmp::Reverse(arith::p_power_part(order, p)), p));
    let candidates: Vec<Vec<Subgroup>> = primes
        .iter()
        .map(|&p| {
            let s = sylow_subgroup_in(g, within, p).expect("p divides the order");
            conjugates_in(g, within, &s)
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    search_systems(g, &candidates, &mut chosen, &mut out, limit);
    Ok(out
        .into_iter()
        .map(|picks| SylowSystem {
            sylows: picks
                .iter()
                .enumerate()
                .map(|(k, &c)| (primes[k], candidates[k][c].clone()))
                .collect(),
        })
        .collect())
}

fn search_systems(
    g: &FiniteGroup,
    candidates: &[Vec<Subgroup>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let depth = chosen.len();
    if depth == candidates.len() {
        out.push(chosen.clone());
        return;
    }
    for (c, cand) in candidates[depth].iter().enumerate() {
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(k, &pick)| permutable(g, &candidates[k][pick], cand));
        if ok {
            chosen.push(c);
            search_systems(g, candidates, chosen, out, limit);
            chosen.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
}

/// Elements of an ambient group normalizing every member of a Sylow system.
#[derive(Debug, Clone)]
pub struct SystemNormalizer {
    pub system: SylowSystem,
    pub members: Subgroup,
}

/// `{ l in ambient : l P l^-1 = P for all P in system }`; with
/// `ambient = G` and a system of `G` this is an absolute system normalizer.
pub fn system_normalizer(g: &FiniteGroup, ambient: &Subgroup, system: &SylowSystem) -> SystemNormalizer {
    let mut current = ambient.clone();
    for s in system.sylows.values() {
        current = normalizer_in(g, &current, s);
    }
    SystemNormalizer {
        system: system.clone(),
        members: current,
    }
}

/// Normal closure of a set of elements.
pub fn normal_closure(g: &FiniteGroup, elems: &[usize]) -> Subgroup {
    let mut class_elems = Vec::new();
    let mut seen = FixedBitSet::with_capacity(g.order());
    for &x in elems {
        for y in g.conjugacy_class(x) {
            if !seen.contains(y) {
                seen.insert(y);
                class_elems.push(y);
            }
        }
    }
    g.subgroup(&class_elems)
}

#[derive(Debug, Clone)]
pub struct NormalSubgroup {
    pub subgroup: Subgroup,
    pub minimal: bool,
}

/// All normal subgroups: the join-closure of the normal closures of single
/// elements, plus the trivial subgroup. Sorted by order, then members.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<NormalSubgroup> {
    let mut found: Vec<Subgroup> = vec![g.trivial()];
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(found[0].mask().clone());
    for class in g.conjugacy_classes() {
        let rep = class[0];
        if rep == 0 {
            continue;
        }
        let n = normal_closure(g, &[rep]);
        if seen.insert(n.mask().clone()) {
            found.push(n);
        }
    }
    let whole = g.whole();
    if seen.insert(whole.mask().clone()) {
        found.push(whole);
    }
    let mut start = 0;
    loop {
        let len = found.len();
        let mut fresh = Vec::new();
        for i in 0..len {
            for j in (i + 1).max(start)..len {
                let a = &found[i];
                let b = &found[j];
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                let joined = a.join(g, b);
                if seen.insert(joined.mask().clone()) {
                    fresh.push(joined);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        start = len;
        found.extend(fresh);
    }
    found.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.member_indices().cmp(b.member_indices()))
    });
    let minimal: Vec<bool> = found
        .iter()
        .map(|n| {
            !n.is_trivial()
                && !found
                    .iter()
                    .any(|m| !m.is_trivial() && m.order() < n.order() && m.is_subset_of(n))
        })
        .collect();
    found
        .into_iter()
        .zip(minimal)
        .map(|(subgroup, minimal)| NormalSubgroup { subgroup, minimal })
        .collect()
}

pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    normal_subgroups(g)
        .into_iter()
        .filter(|n| n.minimal)
        .map(|n| n.subgroup)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn brute_center(g: &FiniteGroup) -> usize {
        (0..g.order())
            .filter(|&x| (0..g.order()).all(|y| g.commute(x, y)))
            .count()
    }

    /// Closure of all commutators of all pairs, repeated.
    fn brute_derived_orders(g: &FiniteGroup) -> Vec<usize> {
        let mut cur: Vec<usize> = (0..g.order()).collect();
        let mut out = vec![cur.len()];
        loop {
            let mut set: Vec<usize> = Vec::new();
            for &a in &cur {
                for &b in &cur {
                    set.push(g.commutator(a, b));
                }
            }
            let next = g.subgroup(&set);
            let next: Vec<usize> = next.members().collect();
            if next.len() == cur.len() {
                return out;
            }
            out.push(next.len());
            cur = next;
            if cur.len() == 1 {
                return out;
            }
        }
    }

    /// Largest p-subgroup found among subgroups generated by at most three
    /// p-elements.
    fn brute_sylow_order(g: &FiniteGroup, p: u64) -> (usize, bool) {
        let pel: Vec<usize> = (1..g.order()).filter(|&x| g.is_p_element(x, p)).collect();
        let mut best = (1, true);
        for &a in &pel {
            for &b in &pel {
                for &c in pel.iter().take(24) {
                    let h = g.subgroup(&[a, b, c]);
                    if arith::is_p_power(h.order() as u64, p) && h.order() > best.0 {
                        best = (h.order(), h.is_abelian(g));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn centralizers_and_centers() {
        let s3 = symmetric(3);
        let three = (0..6).find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(centralizer(&s3, three).order(), 3);
        assert_eq!(centralizer(&s3, 0).order(), 6);
        assert_eq!(center(&s3).order(), brute_center(&s3));
        assert_eq!(center(&s3).order(), 1);
        let q8 = quaternion();
        assert_eq!(center(&q8).order(), brute_center(&q8));
        assert_eq!(center(&q8).order(), 2);
        let c12 = cyclic(12);
        assert_eq!(center(&c12).order(), 12);
        assert_eq!(centralizer(&c12, 5).order(), 12);
    }

    #[test]
    fn derived_series_small() {
        let s3 = symmetric(3);
        assert_eq!(brute_derived_orders(&s3), vec![6, 3, 1]);
        let ds = derived_series(&s3);
        assert_eq!(ds.orders(), vec![6, 3, 1]);
        assert_eq!(ds.derived_length, Some(2));
        let s4 = symmetric(4);
        assert_eq!(brute_derived_orders(&s4), vec![24, 12, 4, 1]);
        assert_eq!(derived_series(&s4).orders(), vec![24, 12, 4, 1]);
        assert_eq!(derived_series(&s4).derived_length, Some(3));
        let c6 = cyclic(6);
        assert_eq!(derived_series(&c6).orders(), vec![6, 1]);
        let a5 = alternating(5);
        assert_eq!(derived_series(&a5).derived_length, None);
    }

    #[test]
    fn sylows() {
        let s3 = symmetric(3);
        assert_eq!(brute_sylow_order(&s3, 3).0, 3);
        assert_eq!(sylow_subgroup(&s3, 3).unwrap().order(), 3);
        let s4 = symmetric(4);
        assert_eq!(brute_sylow_order(&s4, 2), (8, false));
        let p = sylow_subgroup(&s4, 2).unwrap();
        assert_eq!(p.order(), 8);
        assert!(!p.is_abelian(&s4));
        assert_eq!(
            sylow_subgroup(&cyclic(6), 5).unwrap_err(),
            GroupError::PrimeNotDividing { prime: 5, order: 6 }
        );
    }

    #[test]
    fn fitting_subgroups() {
        let s3 = symmetric(3);
        let f = fitting_subgroup(&s3);
        assert_eq!(f.order(), 3);
        let s4 = symmetric(4);
        assert_eq!(fitting_subgroup(&s4).order(), 4);
        let q8 = quaternion();
        assert_eq!(fitting_subgroup(&q8).order(), 8);
        assert!(is_nilpotent(&q8, &q8.whole()));
        assert!(!is_nilpotent(&s3, &s3.whole()));
    }

    #[test]
    fn second_fitting() {
        assert_eq!(second_fitting_preimage(&symmetric(4)).order(), 12);
        assert_eq!(second_fitting_preimage(&symmetric(3)).order(), 6);
        assert_eq!(second_fitting_preimage(&quaternion()).order(), 8);
    }

    #[test]
    fn s3_sylow_system() {
        let s3 = symmetric(3);
        let sys = sylow_system(&s3).unwrap();
        assert_eq!(sys.primes(), vec![2, 3]);
        let (p2, p3) = (&sys.sylows[&2], &sys.sylows[&3]);
        assert_eq!((p2.order(), p3.order()), (2, 3));
        assert_eq!(p2.product_set(&s3, p3), p3.product_set(&s3, p2));
        assert_eq!(sys.hall(&s3, &[2, 3]).order(), 6);
        let m = system_normalizer(&s3, &s3.whole(), &sys);
        assert_eq!(m.members.order(), 2);
        assert!(m.members.intersection(&s3, &derived_series(&s3).terms[1]).is_trivial());
    }

    #[test]
    fn abelian_sylow_system_is_unique() {
        let g = cyclic(12);
        let all = sylow_systems_in(&g, &g.whole(), 10).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(system_normalizer(&g, &g.whole(), &all[0]).members.order(), 12);
    }

    #[test]
    fn sylow_system_needs_solvable() {
        let a5 = alternating(5);
        assert_eq!(sylow_system(&a5).unwrap_err(), GroupError::NotSolvable);
    }

    #[test]
    fn normal_subgroups_of_s3_and_s4() {
        let s3 = symmetric(3);
        let ns = normal_subgroups(&s3);
        let orders: Vec<usize> = ns.iter().map(|n| n.subgroup.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
        let minimal: Vec<usize> = ns.iter().filter(|n| n.minimal).map(|n| n.subgroup.order()).collect();
        assert_eq!(minimal, vec![3]);
        let s4 = symmetric(4);
        let min = minimal_normal_subgroups(&s4);
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].order(), 4);
        let c7 = cyclic(7);
        let ns = normal_subgroups(&c7);
        assert_eq!(ns.len(), 2);
        assert!(ns[1].minimal);
        // every subgroup of an elementary abelian group of order 8 is normal
        assert_eq!(normal_subgroups(&abelian(&[2, 2, 2])).len(), 16);
    }

    #[test]
    fn brute_force_normality_scan_s3() {
        let s3 = symmetric(3);
        let mut normal = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                let h = s3.subgroup(&[a, b]);
                if is_normal_in(&s3, &s3.whole(), &h) && !normal.contains(&h.order()) {
                    normal.push(h.order());
                }
            }
        }
        normal.sort();
        assert_eq!(normal, vec![1, 3, 6]);
    }
}
