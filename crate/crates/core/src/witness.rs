//! Extremal witness groups, rebuilt by constrained searches over
//! semidirect products and identified by invariant fingerprints.
//!
//! `paper-60`: split extensions `B ⋊ A` of abelian groups with
//! `|B||A| = 60`, kept when the result is an A-group of derived length 2
//! satisfying the hypothesis with a connected commuting graph of
//! diameter 4. Matches that differ in their invariants are all emitted, as
//! `paper-60`, `paper-60b`, ...
//!
//! `paper-1500`: faithful actions of `H = C_3 ⋊ C_4` on abelian groups of
//! order 125. Only `C_5^3` admits one (the other two have automorphism
//! groups of order prime to 3), so the search runs over pairs of matrices
//! in `GL(3, 5)`. Every element of order 3 there is conjugate to
//! `diag(1, C)` with `C` the companion matrix of `x^2 + x + 1`, so the image
//! of the order-3 generator is fixed to that form and the order-4
//! generator ranges over matrices inverting it.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::abelian::{abelian_actions, abelian_group_types, AbelianGroup};
use crate::classify::{is_a_group, satisfies_hypothesis};
use crate::construct::{action_from_generator_images, semidirect_product};
use crate::error::{GroupError, Result};
use crate::families::dicyclic;
use crate::graph::build_commuting_graph;
use crate::group::FiniteGroup;
use crate::linalg::{intertwiners, Matrix};
use crate::structure::{center, center_in, derived_series, fitting_subgroup};

/// Isomorphism invariants used to identify witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub fitting_order: usize,
    pub derived_length: Option<usize>,
    pub diameter: Option<u32>,
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        write!(
            f,
            "order {}, |Z| {}, |G'| {}, |F| {}, derived length {}, diameter {}",
            self.order,
            self.center_order,
            self.derived_order,
            self.fitting_order,
            opt(self.derived_length.map(|d| d.to_string())),
            opt(self.diameter.map(|d| d.to_string())),
        )
    }
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let diameter = build_commuting_graph(g).diameter().diameter;
    fingerprint_with_diameter(g, diameter)
}

pub fn fingerprint_with_diameter(g: &FiniteGroup, diameter: Option<u32>) -> Fingerprint {
    let series = derived_series(g);
    Fingerprint {
        order: g.order(),
        center_order: center(g).order(),
        derived_order: series.terms.get(1).map_or(1, |t| t.order()),
        fitting_order: fitting_subgroup(g).order(),
        derived_length: series.derived_length,
        diameter,
    }
}

/// Fingerprint plus element-order and class-size statistics, used to tell
/// search hits apart.
fn extended_key(g: &FiniteGroup, fp: Fingerprint) -> (Fingerprint, Vec<u64>, Vec<usize>) {
    let mut orders: Vec<u64> = (0..g.order()).map(|x| g.element_order(x)).collect();
    orders.sort_unstable();
    let mut classes: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
    classes.sort_unstable();
    (fp, orders, classes)
}

/// How a witness is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Recipe {
    /// `B ⋊ A` for abelian `B`, `A` given by cyclic factor orders.
    /// `action[k][i]` holds the coordinates of the image of the `i`-th
    /// generator of `B` under the `k`-th generator of `A`.
    AbelianSemidirect {
        base: Vec<usize>,
        actor: Vec<usize>,
        action: Vec<Vec<Vec<usize>>>,
    },
    /// `GF(p)^n ⋊ (C_3 ⋊ C_4)` with the two actor generators acting by the
    /// given matrices on column vectors.
    LinearDicyclic {
        prime: u64,
        dim: usize,
        order3: Vec<Vec<u64>>,
        order4: Vec<Vec<u64>>,
    },
}

impl Recipe {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            Recipe::AbelianSemidirect {
                base,
                actor,
                action,
            } => {
                let b = AbelianGroup::new(base);
                let a = AbelianGroup::new(actor);
                let lookup = coordinate_lookup(&b);
                let maps: Vec<Vec<u32>> = action
                    .iter()
                    .map(|gen_images| {
                        let images: Vec<usize> = gen_images.iter().map(|c| lookup[c]).collect();
                        b.extend_hom(&b.group, &images)
                    })
                    .collect();
                let act = action_from_generator_images(&a.group, &maps)?;
                semidirect_product(&b.group, &a.group, &act)
            }
            Recipe::LinearDicyclic {
                prime,
                dim,
                order3,
                order4,
            } => {
                let b = AbelianGroup::new(&vec![*prime as usize; *dim]);
                let h = dicyclic(3);
                let maps: Vec<Vec<u32>> = [order3, order4]
                    .iter()
                    .map(|rows| linear_map_on(&b, &matrix_from_rows(*prime, rows)))
                    .collect();
                let act = action_from_generator_images(&h, &maps)?;
                semidirect_product(&b.group, &h, &act)
            }
        }
    }
}

fn coordinate_lookup(b: &AbelianGroup) -> HashMap<Vec<usize>, usize> {
    b.coordinates()
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect()
}

fn matrix_from_rows(p: u64, rows: &[Vec<u64>]) -> Matrix {
    let refs: Vec<&[u64]> = rows.iter().map(Vec::as_slice).collect();
    Matrix::new(p, &refs)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j)).collect())
        .collect()
}

/// Element permutation of `GF(p)^n` (as an abelian group) induced by `m`.
fn linear_map_on(b: &AbelianGroup, m: &Matrix) -> Vec<u32> {
    let coords = b.coordinates();
    let lookup = coordinate_lookup(b);
    coords
        .iter()
        .map(|c| {
            let v: Vec<u64> = c.iter().map(|&x| x as u64).collect();
            let w: Vec<usize> = m.apply(&v).into_iter().map(|x| x as usize).collect();
            lookup[&w] as u32
        })
        .collect()
}

/// A constructed witness.
#[derive(Debug, Clone)]
pub struct Witness {
    pub name: String,
    pub recipe: Recipe,
    pub group: FiniteGroup,
    pub target: Fingerprint,
}

pub const PAPER_60_TARGET: Fingerprint = Fingerprint {
    order: 60,
    center_order: 1,
    derived_order: 15,
    fitting_order: 15,
    derived_length: Some(2),
    diameter: Some(4),
};

pub const PAPER_1500_TARGET: Fingerprint = Fingerprint {
    order: 1500,
    center_order: 1,
    derived_order: 375,
    fitting_order: 125,
    derived_length: Some(3),
    diameter: Some(6),
};

/// Outcome of the order-60 search, one entry per distinct match.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub recipe: Recipe,
    pub group: FiniteGroup,
    pub fingerprint: Fingerprint,
}

/// Every `B ⋊ A` with `B`, `A` nontrivial abelian, `|B||A| = order`, and a
/// nontrivial action, in a fixed order.
pub fn abelian_split_extensions(order: usize) -> Vec<(Recipe, FiniteGroup)> {
    let mut out = Vec::new();
    for base_order in (2..order).filter(|d| order % d == 0) {
        for base_type in abelian_group_types(base_order) {
            let base = AbelianGroup::new(&base_type);
            let auts = base.automorphisms();
            let coords = base.coordinates();
            for actor_type in abelian_group_types(order / base_order) {
                let actor = AbelianGroup::new(&actor_type);
                for maps in abelian_actions(&actor, &auts) {
                    let action = maps
                        .iter()
                        .map(|m| {
                            base.group
                                .generators()
                                .iter()
                                .map(|&s| coords[m[s] as usize].clone())
                                .collect()
                        })
                        .collect();
                    let recipe = Recipe::AbelianSemidirect {
                        base: base.factors.clone(),
                        actor: actor.factors.clone(),
                        action,
                    };
                    let act = action_from_generator_images(&actor.group, &maps)
                        .expect("commuting automorphisms define an action");
                    let g = semidirect_product(&base.group, &actor.group, &act)
                        .expect("validated action");
                    out.push((recipe, g));
                }
            }
        }
    }
    out
}

/// Search for A-groups of order 60 and derived length 2 satisfying the
/// hypothesis whose commuting graph is connected of diameter 4. Returns one
/// hit per distinct invariant key, in search order.
pub fn search_paper_60() -> Vec<SearchHit> {
    let mut seen = HashSet::new();
    let mut hits = Vec::new();
    for (recipe, g) in abelian_split_extensions(60) {
        if !is_a_group(&g) || derived_series(&g).derived_length != Some(2) {
            continue;
        }
        if !satisfies_hypothesis(&g) {
            continue;
        }
        let d = build_commuting_graph(&g).diameter();
        if d.diameter != Some(4) {
            continue;
        }
        let fp = fingerprint_with_diameter(&g, d.diameter);
        if seen.insert(extended_key(&g, fp)) {
            hits.push(SearchHit {
                recipe,
                group: g,
                fingerprint: fp,
            });
        }
    }
    hits
}

/// Orders of the automorphism groups of the non-elementary abelian groups
/// of order 125. None is divisible by 3, so none admits a faithful action
/// of a group containing an element of order 3.
pub fn excluded_bases_125() -> Vec<(Vec<usize>, usize)> {
    abelian_group_types(125)
        .into_iter()
        .filter(|t| t != &vec![5, 5, 5])
        .map(|t| {
            let n = AbelianGroup::new(&t).automorphism_count();
            (t, n)
        })
        .collect()
}

/// A faithful action of `C_3 ⋊ C_4` on `GF(5)^3`, up to the conjugacy key
/// `(λ up to inversion, ν)` where `λ` is the eigenvalue of the order-4
/// generator on the fixed line of the order-3 generator and `ν` the scalar
/// by which its square acts on the complementary plane.
#[derive(Debug, Clone)]
pub struct LinearCandidate {
    pub lambda: u64,
    pub nu: u64,
    pub recipe: Recipe,
}

fn matrix_group_order(gens: &[Matrix], cap: usize) -> usize {
    let n = gens[0].dim();
    let id = Matrix::identity(gens[0].modulus(), n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let next = m.mul(g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return seen.len();
                }
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

/// Faithful actions of `C_3 ⋊ C_4` on `GF(5)^3`, one per conjugacy key.
pub fn linear_candidates_1500() -> Vec<LinearCandidate> {
    let p = 5;
    let companion = Matrix::new(p, &[&[0, 4], &[1, 4]]);
    let a = Matrix::identity(p, 1).block_diag(&companion);
    let a_inv = a.pow(2);
    let basis = intertwiners(&a, &a_inv);
    let mut keys = HashSet::new();
    let mut out = Vec::new();
    let total = (p as usize).pow(basis.len() as u32);
    for code in 0..total {
        let mut data = vec![0u64; 9];
        let mut rest = code;
        for b in &basis {
            let c = (rest % p as usize) as u64;
            rest /= p as usize;
            for (d, &e) in data.iter_mut().zip(b.entries()) {
                *d = (*d + c * e) % p;
            }
        }
        let x = Matrix::from_flat(p, 3, data);
        if !x.is_invertible() || !x.pow(4).is_identity() {
            continue;
        }
        if matrix_group_order(&[a.clone(), x.clone()], 12) != 12 {
            continue;
        }
        let lambda = x.get(0, 0);
        let lambda_key = lambda.min(crate::arith::mod_inverse(lambda, p).expect("unit"));
        let nu = x.pow(2).get(1, 1);
        if keys.insert((lambda_key, nu)) {
            out.push(LinearCandidate {
                lambda,
                nu,
                recipe: Recipe::LinearDicyclic {
                    prime: p,
                    dim: 3,
                    order3: matrix_rows(&a),
                    order4: matrix_rows(&x),
                },
            });
        }
    }
    out
}

/// Named structural properties required of the order-1500 witness.
pub fn paper_1500_properties(g: &FiniteGroup) -> Vec<(&'static str, bool)> {
    let series = derived_series(g);
    let derived = series.terms.get(1).cloned().unwrap_or_else(|| g.trivial());
    let f = fitting_subgroup(g);
    let five_part = crate::arith::p_power_part(g.order() as u64, 5) as usize;
    let two_elements: Vec<usize> = (1..g.order()).filter(|&x| g.is_p_element(x, 2)).collect();
    let three_elements: Vec<usize> = (1..g.order()).filter(|&x| g.is_p_element(x, 3)).collect();
    let mut props = vec![
        ("order-1500", g.order() == 1500),
        ("trivial-center", center(g).is_trivial()),
        ("derived-order-375", derived.order() == 375),
        ("derived-center-nontrivial", !center_in(g, &derived).is_trivial()),
        ("fitting-is-sylow-5", f.order() == five_part && five_part > 1),
        (
            "two-elements-avoid-fitting",
            two_elements
                .iter()
                .all(|&x| f.members().skip(1).all(|y| !g.commute(x, y))),
        ),
        (
            "order-4-avoid-3-elements",
            two_elements
                .iter()
                .filter(|&&x| g.element_order(x) == 4)
                .all(|&x| three_elements.iter().all(|&y| !g.commute(x, y))),
        ),
    ];
    let d = build_commuting_graph(g).diameter();
    props.push(("diameter-6", d.connected() && d.diameter == Some(6)));
    props
}

/// Runs the order-1500 search and returns every candidate group with its
/// fingerprint, plus the index of the first one meeting every property.
pub fn search_paper_1500() -> (Vec<(LinearCandidate, FiniteGroup)>, Option<usize>) {
    let mut built = Vec::new();
    let mut chosen = None;
    for cand in linear_candidates_1500() {
        let g = cand.recipe.build().expect("validated linear action");
        if chosen.is_none() && paper_1500_properties(&g).iter().all(|(_, ok)| *ok) {
            chosen = Some(built.len());
        }
        built.push((cand, g));
    }
    (built, chosen)
}

fn letter_suffix(k: usize) -> String {
    if k == 0 {
        String::new()
    } else {
        ((b'a' + k as u8) as char).to_string()
    }
}

/// Names of the available witnesses, in search order.
pub fn witness_names() -> Vec<String> {
    let mut names: Vec<String> = (0..search_paper_60().len())
        .map(|k| format!("paper-60{}", letter_suffix(k)))
        .collect();
    names.push("paper-1500".into());
    names
}

/// Builds a named witness and checks its fingerprint against the target.
pub fn build_witness(name: &str) -> Result<Witness> {
    let witness = if name == "paper-1500" {
        let (mut built, chosen) = search_paper_1500();
        let k = chosen.ok_or_else(|| GroupError::FingerprintMismatch {
            name: name.into(),
            detail: "no candidate meets every property".into(),
        })?;
        let (cand, group) = built.swap_remove(k);
        Witness {
            name: name.into(),
            recipe: cand.recipe,
            group,
            target: PAPER_1500_TARGET,
        }
    } else if let Some(suffix) = name.strip_prefix("paper-60") {
        let k = match suffix {
            "" => 0,
            s if s.len() == 1 && s.as_bytes()[0].is_ascii_lowercase() && s != "a" => {
                (s.as_bytes()[0] - b'a') as usize
            }
            _ => return Err(GroupError::UnknownWitness(name.into())),
        };
        let mut hits = search_paper_60();
        if k >= hits.len() {
            return Err(GroupError::UnknownWitness(name.into()));
        }
        let hit = hits.swap_remove(k);
        Witness {
            name: name.into(),
            recipe: hit.recipe,
            group: hit.group,
            target: if k == 0 { PAPER_60_TARGET } else { hit.fingerprint },
        }
    } else {
        return Err(GroupError::UnknownWitness(name.into()));
    };
    validate_witness(&witness)?;
    Ok(witness)
}

pub fn validate_witness(w: &Witness) -> Result<()> {
    let fp = fingerprint(&w.group);
    if fp != w.target {
        return Err(GroupError::FingerprintMismatch {
            name: w.name.clone(),
            detail: format!("expected {}, got {}", w.target, fp),
        });
    }
    if w.name == "paper-1500" {
        let failed: Vec<&str> = paper_1500_properties(&w.group)
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| n)
            .collect();
        if !failed.is_empty() {
            return Err(GroupError::FingerprintMismatch {
                name: w.name.clone(),
                detail: format!("failed properties: {}", failed.join(", ")),
            });
        }
    }
    Ok(())
}
