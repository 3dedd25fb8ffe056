//! Permutation groups with cycle-notation input.

use std::collections::BTreeMap;

use super::abstract_group::AbstractGroup;
use super::{conjugacy_class, element_order, GroupOps};
use crate::{EngineError, Result};

/// A permutation of `0..degree`, stored as its image vector.
pub type Perm = Vec<u8>;

/// A finite permutation group, closed and indexed (identity first).
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elems: Vec<Perm>,
    index: BTreeMap<Perm, u32>,
    gens: Vec<u32>,
}

impl GroupOps for PermGroup {
    fn size(&self) -> usize {
        self.elems.len()
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = compose(&self.elems[a as usize], &self.elems[b as usize]);
        self.index[&p]
    }
    fn inv(&self, a: u32) -> u32 {
        self.index[&invert(&self.elems[a as usize])]
    }
    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }
}

/// `(a * b)(x) = a(b(x))`.
fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn invert(a: &Perm) -> Perm {
    let mut out = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

impl PermGroup {
    /// Builds the group generated by cycle-notation words, one generator per
    /// string (e.g. `"(1,2,3)(4,5)"`).  Points are 1-based in the notation;
    /// the degree is the largest point mentioned.
    pub fn from_cycles(gens: &[&str]) -> Result<PermGroup> {
        let mut degree = 1;
        let mut parsed: Vec<Vec<Vec<usize>>> = Vec::new();
        for word in gens {
            let cycles = parse_cycles(word)?;
            for cyc in &cycles {
                for &p in cyc {
                    degree = degree.max(p);
                }
            }
            parsed.push(cycles);
        }
        let perm_gens: Vec<Perm> = parsed
            .iter()
            .map(|cycles| {
                let mut p: Perm = (0..degree as u8).collect();
                // Rightmost cycle acts first; disjoint cycles commute anyway.
                for cyc in cycles.iter().rev() {
                    let step: Perm = cycle_to_perm(cyc, degree);
                    p = compose(&step, &p);
                }
                p
            })
            .collect();
        PermGroup::from_perms(degree, perm_gens)
    }

    /// Builds the group generated by explicit image vectors.
    pub fn from_perms(degree: usize, gens: Vec<Perm>) -> Result<PermGroup> {
        assert!(degree >= 1 && degree <= u8::MAX as usize);
        for g in &gens {
            assert_eq!(g.len(), degree, "generator degree mismatch");
            let mut seen = vec![false; degree];
            for &x in g {
                assert!((x as usize) < degree && !seen[x as usize], "not a permutation");
                seen[x as usize] = true;
            }
        }
        let cap = crate::size_cap();
        let id: Perm = (0..degree as u8).collect();
        let mut elems = vec![id.clone()];
        let mut index: BTreeMap<Perm, u32> = BTreeMap::new();
        index.insert(id, 0);
        let mut cursor = 0;
        while cursor < elems.len() {
            let x = elems[cursor].clone();
            cursor += 1;
            for g in &gens {
                let y = compose(&x, g);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(EngineError::SizeCapExceeded { cap });
                    }
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
        }
        let gen_ids = gens.iter().map(|g| index[g]).collect();
        Ok(PermGroup {
            degree,
            elems,
            index,
            gens: gen_ids,
        })
    }

    /// The trivial group on one point.
    pub fn trivial() -> PermGroup {
        PermGroup::from_perms(1, vec![]).expect("trivial group")
    }

    /// Number of moved points' universe.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    /// The permutation at an index.
    pub fn perm(&self, idx: u32) -> &Perm {
        &self.elems[idx as usize]
    }

    /// Indices of all involutions.
    pub fn involutions(&self) -> Vec<u32> {
        (0..self.size() as u32)
            .filter(|&x| element_order(self, x) == 2)
            .collect()
    }

    /// Number of conjugacy classes of involutions.
    pub fn involution_class_count(&self) -> usize {
        let mut remaining: Vec<u32> = self.involutions();
        let mut classes = 0;
        while let Some(&x) = remaining.first() {
            let class = conjugacy_class(self, x);
            remaining.retain(|y| !class.contains(y));
            classes += 1;
        }
        classes
    }

    /// Full multiplication table as an abstract group (indices preserved).
    pub fn to_abstract(&self) -> AbstractGroup {
        let n = self.size();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = self.mul(i as u32, j as u32);
            }
        }
        AbstractGroup::from_mul_table(n, mul)
    }
}

/// Parses `"(1,2,3)(4,5)"` into cycles of 1-based points.
fn parse_cycles(word: &str) -> Result<Vec<Vec<usize>>> {
    let bad = |msg: &str| EngineError::BadSpec(format!("bad cycle word `{word}`: {msg}"));
    let w = word.trim();
    if w.is_empty() || w == "()" || w == "id" {
        return Ok(vec![]);
    }
    if !w.starts_with('(') || !w.ends_with(')') {
        return Err(bad("expected parenthesized cycles"));
    }
    let mut cycles = Vec::new();
    for chunk in w[1..w.len() - 1].split(")(") {
        let mut cyc = Vec::new();
        for tok in chunk.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| bad("cycle entries must be positive integers"))?;
            if p == 0 {
                return Err(bad("points are 1-based"));
            }
            if cyc.contains(&p) {
                return Err(bad("repeated point inside a cycle"));
            }
            cyc.push(p);
        }
        if cyc.len() < 2 {
            return Err(bad("cycles need at least two points"));
        }
        cycles.push(cyc);
    }
    Ok(cycles)
}

fn cycle_to_perm(cyc: &[usize], degree: usize) -> Perm {
    let mut p: Perm = (0..degree as u8).collect();
    for k in 0..cyc.len() {
        let from = cyc[k] - 1;
        let to = cyc[(k + 1) % cyc.len()] - 1;
        p[from] = to as u8;
    }
    p
}
