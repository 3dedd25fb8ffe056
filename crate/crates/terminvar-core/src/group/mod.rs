//! Finite group machinery shared by every pipeline stage.
//!
//! Three concrete group realizations are used: [`action::ActionGroup`]
//! (affine transformations of a torus, the main object), [`perm::PermGroup`]
//! (permutation groups for the Hilbert-square input data) and
//! [`abstract_group::AbstractGroup`] (plain multiplication tables, used for
//! quotients, subgroups and isomorphism tests).  The [`GroupOps`] trait
//! exposes the minimal indexed-element interface, and the free functions in
//! this module implement closure, conjugacy, normal closure and quotients
//! uniformly on top of it.

pub mod abstract_group;
pub mod action;
pub mod catalogue;
pub mod enumerate;
pub mod perm;

use std::collections::{BTreeMap, BTreeSet};

use abstract_group::AbstractGroup;

/// The minimal interface of an indexed finite group: elements are
/// `0..size()`, with `0` the identity.
pub trait GroupOps {
    /// Number of elements.
    fn size(&self) -> usize;
    /// Product of elements by index.
    fn mul(&self, a: u32, b: u32) -> u32;
    /// Inverse of an element by index.
    fn inv(&self, a: u32) -> u32;
    /// A generating set (defaults to every element).
    fn generators(&self) -> Vec<u32> {
        (0..self.size() as u32).collect()
    }
}

/// Order of the element with index `x`.
pub fn element_order<G: GroupOps>(g: &G, x: u32) -> u32 {
    let mut p = x;
    let mut k = 1;
    while p != 0 {
        p = g.mul(p, x);
        k += 1;
    }
    k
}

/// Subgroup generated by `seed`, as a sorted index list.
pub fn closure<G: GroupOps>(g: &G, seed: &[u32]) -> Vec<u32> {
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    seen.insert(0);
    let mut frontier: Vec<u32> = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in seed {
            let y = g.mul(x, s);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Conjugacy class of `x` in the full group, via conjugation by generators.
pub fn conjugacy_class<G: GroupOps>(g: &G, x: u32) -> Vec<u32> {
    let gens = g.generators();
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    seen.insert(x);
    let mut frontier = vec![x];
    while let Some(y) = frontier.pop() {
        for &s in &gens {
            let z = g.mul(g.mul(s, y), g.inv(s));
            if seen.insert(z) {
                frontier.push(z);
            }
        }
    }
    seen.into_iter().collect()
}

/// All conjugacy classes, each sorted, ordered by minimal member.
pub fn conjugacy_classes<G: GroupOps>(g: &G) -> Vec<Vec<u32>> {
    let mut assigned = vec![false; g.size()];
    let mut out = Vec::new();
    for x in 0..g.size() as u32 {
        if assigned[x as usize] {
            continue;
        }
        let class = conjugacy_class(g, x);
        for &y in &class {
            assigned[y as usize] = true;
        }
        out.push(class);
    }
    out
}

/// Normal closure of `seed`: the smallest normal subgroup containing it.
pub fn normal_closure<G: GroupOps>(g: &G, seed: &[u32]) -> Vec<u32> {
    let gens = g.generators();
    let mut conj_seed: BTreeSet<u32> = BTreeSet::new();
    let mut frontier: Vec<u32> = seed.to_vec();
    conj_seed.extend(seed.iter().copied());
    while let Some(y) = frontier.pop() {
        for &s in &gens {
            let z = g.mul(g.mul(s, y), g.inv(s));
            if conj_seed.insert(z) {
                frontier.push(z);
            }
        }
    }
    let all: Vec<u32> = conj_seed.into_iter().collect();
    closure(g, &all)
}

/// Re-labels a subgroup (given as a sorted index list) as a standalone
/// multiplication table.
pub fn subgroup_abstract<G: GroupOps>(g: &G, elems: &[u32]) -> AbstractGroup {
    let n = elems.len();
    let index: BTreeMap<u32, u32> = elems
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i as u32))
        .collect();
    assert_eq!(index.get(&0), Some(&0), "subgroup must contain the identity");
    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let p = g.mul(elems[i], elems[j]);
            mul[i * n + j] = *index
                .get(&p)
                .expect("element list is not closed under multiplication");
        }
    }
    AbstractGroup::from_mul_table(n, mul)
}

/// The quotient by a normal subgroup (sorted index list), as a
/// multiplication table on cosets.  Panics if the subgroup is not normal.
pub fn quotient<G: GroupOps>(g: &G, normal: &[u32]) -> AbstractGroup {
    let n = g.size();
    let nset: BTreeSet<u32> = normal.iter().copied().collect();
    assert!(nset.contains(&0));
    // Label each element with the minimal index in its right coset xN.
    let mut label = vec![u32::MAX; n];
    let mut reps: Vec<u32> = Vec::new();
    for x in 0..n as u32 {
        if label[x as usize] != u32::MAX {
            continue;
        }
        let coset: BTreeSet<u32> = normal.iter().map(|&s| g.mul(x, s)).collect();
        let rep_id = reps.len() as u32;
        // The identity's coset is N itself, containing 0, so the coset of
        // the identity gets label 0 first: BTreeSet min ordering ensures the
        // scan hits x=0 first and its coset becomes rep 0.
        for &y in &coset {
            assert_eq!(label[y as usize], u32::MAX, "cosets overlap");
            label[y as usize] = rep_id;
        }
        reps.push(*coset.iter().next().unwrap());
    }
    let q = reps.len();
    let mut mul = vec![0u32; q * q];
    for i in 0..q {
        for j in 0..q {
            mul[i * q + j] = label[g.mul(reps[i], reps[j]) as usize];
        }
    }
    let table = AbstractGroup::from_mul_table(q, mul);
    // Well-definedness of the coset product is equivalent to normality; the
    // table constructor checks the group axioms, which fail otherwise.
    table
}
