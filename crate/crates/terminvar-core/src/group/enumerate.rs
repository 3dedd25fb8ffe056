//! Exhaustive subgroup enumeration for small solvable groups.
//!
//! Subgroups are produced bottom-up by prime cyclic extensions: every
//! subgroup `K` of a solvable group has a normal subgroup of prime index,
//! so sweeping `H -> <H, x>` over all `x` that normalize `H` with a prime
//! power of `x` inside `H` reaches every subgroup layer by layer.  The
//! extension `<H, x>` is assembled directly as a union of cosets, so no
//! generic closure runs in the hot path.  Conjugate subgroups are merged
//! into classes afterwards.

use std::collections::BTreeSet;

use super::GroupOps;

/// A conjugacy class of subgroups of the ambient group.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Least element set in the class, sorted ascending.
    pub rep: Vec<u32>,
    /// Number of conjugate subgroups.
    pub class_size: usize,
}

/// Flat multiplication table for constant-time products.
struct Table {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Table {
    fn new<G: GroupOps>(g: &G) -> Table {
        let n = g.size();
        let mut mul = vec![0u32; n * n];
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                mul[a as usize * n + b as usize] = g.mul(a, b);
            }
        }
        let inv = (0..n as u32).map(|a| g.inv(a)).collect();
        Table { n, mul, inv }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }
}

fn contains(sorted: &[u32], x: u32) -> bool {
    sorted.binary_search(&x).is_ok()
}

fn is_prime(k: usize) -> bool {
    if k < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= k {
        if k % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Every subgroup of `g`, as sorted element-index lists.
///
/// `g` must be solvable with the identity at index 0 (true of all groups
/// built by this crate); ambient orders beyond a few thousand get slow.
pub fn all_subgroups<G: GroupOps>(g: &G) -> Vec<Vec<u32>> {
    let t = Table::new(g);
    debug_assert_eq!(t.mul(0, 0), 0, "identity must sit at index 0");
    let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
    let trivial = vec![0u32];
    all.insert(trivial.clone());
    let mut layer = vec![trivial];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for h in &layer {
            let mut coset_seen = vec![false; t.n];
            for x in 0..t.n as u32 {
                if coset_seen[x as usize] {
                    continue;
                }
                for &hh in h {
                    coset_seen[t.mul(x, hh) as usize] = true;
                }
                if contains(h, x) {
                    continue;
                }
                // x must normalize H (conjugation is constant on cosets).
                let xi = t.inv[x as usize];
                if !h.iter().all(|&hh| contains(h, t.mul(t.mul(x, hh), xi))) {
                    continue;
                }
                // Order of the coset xH in N(H)/H; extensions step by primes.
                let mut power = x;
                let mut k = 1usize;
                while !contains(h, power) {
                    power = t.mul(power, x);
                    k += 1;
                }
                if !is_prime(k) {
                    continue;
                }
                let mut elems = h.clone();
                let mut xj = x;
                for _ in 1..k {
                    for &hh in h {
                        elems.push(t.mul(xj, hh));
                    }
                    xj = t.mul(xj, x);
                }
                elems.sort_unstable();
                debug_assert_eq!(elems.len(), k * h.len());
                if all.insert(elems.clone()) {
                    next.push(elems);
                }
            }
        }
        layer = next;
    }
    all.into_iter().collect()
}

/// The subgroups of `g` up to conjugation, least representative first.
pub fn subgroup_classes<G: GroupOps>(g: &G) -> Vec<SubgroupClass> {
    let t = Table::new(g);
    let all: BTreeSet<Vec<u32>> = all_subgroups(g).into_iter().collect();
    let gens = g.generators();
    let mut visited: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut classes = Vec::new();
    for h in &all {
        if visited.contains(h) {
            continue;
        }
        let mut orbit: BTreeSet<Vec<u32>> = BTreeSet::new();
        orbit.insert(h.clone());
        let mut queue = vec![h.clone()];
        while let Some(cur) = queue.pop() {
            for &x in &gens {
                let xi = t.inv[x as usize];
                let mut conj: Vec<u32> = cur
                    .iter()
                    .map(|&s| t.mul(t.mul(x, s), xi))
                    .collect();
                conj.sort_unstable();
                if !orbit.contains(&conj) {
                    debug_assert!(all.contains(&conj), "conjugate escaped the lattice");
                    orbit.insert(conj.clone());
                    queue.push(conj);
                }
            }
        }
        visited.extend(orbit.iter().cloned());
        classes.push(SubgroupClass {
            rep: h.clone(),
            class_size: orbit.len(),
        });
    }
    classes
}
