//! Finite groups of affine transformations `x -> M x + t` of a torus
//! `R^4 / Z^4`, the central objects of the whole pipeline.
//!
//! Elements are stored compactly: the translation as numerators at the
//! group's level (all translations in these groups are torsion of that
//! level), the linear part as an index into an interned table.  The interned
//! table also carries each linear part's complex realization, so downstream
//! fixed-locus work never recomputes it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::abstract_group::AbstractGroup;
use super::GroupOps;
use crate::algebra::matrix::Matrix;
use crate::algebra::torsion::TorsionPoint;
use crate::models::TorusModel;
use crate::{CMat, EngineError, IMat, Result};

/// One generator of an affine action, as written in catalogue entries and
/// `--spec` files: translation numerators at the ambient level, plus a
/// `*`-separated word in the model's linear symbols (empty or `id` for a
/// pure translation).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GenSpec {
    /// Translation numerators at the group's level.
    pub translation: [i64; 4],
    /// Linear word (e.g. `"g6"`, `"li*lw"`, `""`).
    #[serde(default)]
    pub linear: String,
}

impl GenSpec {
    /// A pure translation.
    pub fn translation_only(t: [i64; 4]) -> GenSpec {
        GenSpec {
            translation: t,
            linear: String::new(),
        }
    }

    /// A linear generator with a translation part.
    pub fn affine(t: [i64; 4], word: &str) -> GenSpec {
        GenSpec {
            translation: t,
            linear: word.to_string(),
        }
    }

    /// A purely linear generator.
    pub fn linear_only(word: &str) -> GenSpec {
        Self::affine([0, 0, 0, 0], word)
    }
}

/// A compact affine transformation: translation numerators modulo the level,
/// plus the index of the interned linear part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem {
    /// Translation numerators in `0..level`.
    pub t: [u8; 4],
    /// Index into the group's linear-part table.
    pub lin: u16,
}

/// An interned linear part with both realizations and cached structure.
#[derive(Clone, Debug)]
pub struct LinearPart {
    /// Lattice action.
    pub imat: IMat,
    /// Lattice action as plain machine integers for hot loops.
    pub imat_i64: [[i64; 4]; 4],
    /// Tangent-space action over `Q(zeta_12)`.
    pub cmat: CMat,
    /// Multiplicative order.
    pub order: u32,
    /// Index of the inverse part.
    pub inv: u16,
}

/// A finite group of affine transformations of `R^4 / Z^4`.
#[derive(Debug)]
pub struct ActionGroup {
    /// Name of the underlying torus model.
    pub model_name: String,
    level: u8,
    parts: Vec<LinearPart>,
    part_mul: Vec<u16>,
    elems: Vec<Elem>,
    index: BTreeMap<Elem, u32>,
    gens: Vec<u32>,
}

impl GroupOps for ActionGroup {
    fn size(&self) -> usize {
        self.elems.len()
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.compose(&self.elems[a as usize], &self.elems[b as usize]);
        self.index[&p]
    }
    fn inv(&self, a: u32) -> u32 {
        let p = self.invert(&self.elems[a as usize]);
        self.index[&p]
    }
    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }
}

impl ActionGroup {
    /// Builds the closure of the given generators inside the affine
    /// transformations of the level-`level` torsion frame, stopping with an
    /// error if it would exceed `cap` elements.
    pub fn new(
        model: &TorusModel,
        level: i64,
        gens: &[GenSpec],
        cap: usize,
    ) -> Result<ActionGroup> {
        assert!((2..=250).contains(&level));
        // Resolve generator linear parts and intern the closure of the
        // linear-part group first (it is small: at most 24 here).
        let mut gen_lin: Vec<(IMat, CMat)> = Vec::new();
        for spec in gens {
            let word = spec.linear.trim();
            if word.is_empty() || word == "id" {
                gen_lin.push((Matrix::identity(4), Matrix::identity(2)));
            } else {
                let lg = model.linear_word(word)?;
                gen_lin.push((lg.imat, lg.cmat));
            }
        }
        let (parts, part_mul, part_index) = intern_parts(&gen_lin)?;

        let mut group = ActionGroup {
            model_name: model.name.to_string(),
            level: level as u8,
            parts,
            part_mul,
            elems: Vec::new(),
            index: BTreeMap::new(),
            gens: Vec::new(),
        };
        let id = Elem {
            t: [0; 4],
            lin: 0,
        };
        group.elems.push(id);
        group.index.insert(id, 0);

        let gen_elems: Vec<Elem> = gens
            .iter()
            .zip(&gen_lin)
            .map(|(spec, (imat, _))| {
                let mut t = [0u8; 4];
                for (i, slot) in t.iter_mut().enumerate() {
                    *slot = spec.translation[i].rem_euclid(level) as u8;
                }
                Elem {
                    t,
                    lin: part_index[imat],
                }
            })
            .collect();

        let mut cursor = 0;
        while cursor < group.elems.len() {
            let x = group.elems[cursor];
            cursor += 1;
            for g in &gen_elems {
                let y = group.compose(&x, g);
                if !group.index.contains_key(&y) {
                    if group.elems.len() >= cap {
                        return Err(EngineError::SizeCapExceeded { cap });
                    }
                    group.index.insert(y, group.elems.len() as u32);
                    group.elems.push(y);
                }
            }
        }
        group.gens = gen_elems.iter().map(|g| group.index[g]).collect();
        Ok(group)
    }

    /// Torsion level of the frame (`n + 1`).
    pub fn level(&self) -> i64 {
        self.level as i64
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    /// Element by index.
    pub fn elem(&self, idx: u32) -> &Elem {
        &self.elems[idx as usize]
    }

    /// Index of an element, if present.
    pub fn index_of(&self, e: &Elem) -> Option<u32> {
        self.index.get(e).copied()
    }

    /// The interned linear part table.
    pub fn parts(&self) -> &[LinearPart] {
        &self.parts
    }

    /// Linear part of an element.
    pub fn part_of(&self, idx: u32) -> &LinearPart {
        &self.parts[self.elems[idx as usize].lin as usize]
    }

    /// Product of two affine transformations.
    pub fn compose(&self, a: &Elem, b: &Elem) -> Elem {
        let m = &self.parts[a.lin as usize].imat_i64;
        let lvl = self.level as i64;
        let mut t = [0u8; 4];
        for i in 0..4 {
            let mut acc = a.t[i] as i64;
            for j in 0..4 {
                acc += m[i][j] * b.t[j] as i64;
            }
            t[i] = acc.rem_euclid(lvl) as u8;
        }
        Elem {
            t,
            lin: self.part_mul[a.lin as usize * self.parts.len() + b.lin as usize],
        }
    }

    /// Inverse of an affine transformation.
    pub fn invert(&self, a: &Elem) -> Elem {
        let inv_lin = self.parts[a.lin as usize].inv;
        let m = &self.parts[inv_lin as usize].imat_i64;
        let lvl = self.level as i64;
        let mut t = [0u8; 4];
        for i in 0..4 {
            let mut acc = 0i64;
            for j in 0..4 {
                acc -= m[i][j] * a.t[j] as i64;
            }
            t[i] = acc.rem_euclid(lvl) as u8;
        }
        Elem { t, lin: inv_lin }
    }

    /// The translation of an element as an exact torsion point.
    pub fn translation_of(&self, idx: u32) -> TorsionPoint {
        let e = &self.elems[idx as usize];
        TorsionPoint::from_level(
            [
                e.t[0] as i64,
                e.t[1] as i64,
                e.t[2] as i64,
                e.t[3] as i64,
            ],
            self.level as i64,
        )
    }

    /// Applies an element to a point of the torus.
    pub fn apply(&self, idx: u32, p: &TorsionPoint) -> TorsionPoint {
        let e = &self.elems[idx as usize];
        let moved = p.apply_i64(&self.parts[e.lin as usize].imat_i64);
        moved.add(&self.translation_of(idx))
    }

    /// Indices of the pure translations in the group.
    pub fn translation_subgroup(&self) -> Vec<u32> {
        (0..self.size() as u32)
            .filter(|&i| self.elems[i as usize].lin == 0)
            .collect()
    }

    /// The image of the group in the linear frame, `G_0 = G / G_tr`, as an
    /// abstract group (indices match the linear-part table).
    pub fn g0_abstract(&self) -> AbstractGroup {
        let n = self.parts.len();
        AbstractGroup::from_mul_table(
            n,
            self.part_mul.iter().map(|&x| x as u32).collect(),
        )
    }

    /// Extracts a closed element set as a standalone group: linear parts
    /// are re-interned to the ones in use, elements renumbered with the
    /// identity first, and a small generating set recomputed.
    ///
    /// Panics if the set lacks the identity or is not closed.
    pub fn subgroup(&self, elems: &[u32]) -> ActionGroup {
        let mut sorted: Vec<u32> = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.first(), Some(&0), "a subgroup contains the identity");

        let mut used: Vec<u16> = sorted
            .iter()
            .map(|&i| self.elems[i as usize].lin)
            .collect();
        used.sort_unstable();
        used.dedup();
        let part_map: BTreeMap<u16, u16> = used
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as u16))
            .collect();
        let k = used.len();
        let mut part_mul = vec![0u16; k * k];
        for (i, &oi) in used.iter().enumerate() {
            for (j, &oj) in used.iter().enumerate() {
                let prod = self.part_mul[oi as usize * self.parts.len() + oj as usize];
                part_mul[i * k + j] = *part_map
                    .get(&prod)
                    .expect("linear parts of a closed subgroup close among themselves");
            }
        }
        let parts: Vec<LinearPart> = used
            .iter()
            .map(|&oi| {
                let mut p = self.parts[oi as usize].clone();
                p.inv = part_map[&p.inv];
                p
            })
            .collect();

        let mut group = ActionGroup {
            model_name: self.model_name.clone(),
            level: self.level,
            parts,
            part_mul,
            elems: Vec::new(),
            index: BTreeMap::new(),
            gens: Vec::new(),
        };
        for &i in &sorted {
            let e = self.elems[i as usize];
            let ne = Elem {
                t: e.t,
                lin: part_map[&e.lin],
            };
            group.index.insert(ne, group.elems.len() as u32);
            group.elems.push(ne);
        }
        // Closure spot check: a deterministic sample of products must land
        // back in the set.
        debug_assert!({
            let n = group.elems.len();
            let stride = (n * n / 64).max(1);
            (0..n * n).step_by(stride).all(|p| {
                let prod = group.compose(&group.elems[p / n], &group.elems[p % n]);
                group.index.contains_key(&prod)
            })
        });

        // Greedy small generating set.
        let mut gens: Vec<u32> = Vec::new();
        let mut have = vec![0u32];
        while have.len() < group.elems.len() {
            let mut in_have = vec![false; group.elems.len()];
            for &x in &have {
                in_have[x as usize] = true;
            }
            let next = (1..group.elems.len() as u32)
                .find(|&x| !in_have[x as usize])
                .expect("closure below full order misses an element");
            gens.push(next);
            have = super::closure(&group, &gens);
        }
        if gens.is_empty() {
            gens.push(0);
        }
        group.gens = gens;
        group
    }
}

/// Interns the closure of the generated linear-part group, with the identity
/// at index 0, and builds the multiplication table.
#[allow(clippy::type_complexity)]
fn intern_parts(
    gen_lin: &[(IMat, CMat)],
) -> Result<(Vec<LinearPart>, Vec<u16>, BTreeMap<IMat, u16>)> {
    let id: IMat = Matrix::identity(4);
    let mut mats: Vec<(IMat, CMat)> = vec![(id.clone(), Matrix::identity(2))];
    let mut index: BTreeMap<IMat, u16> = BTreeMap::new();
    index.insert(id, 0);
    let mut cursor = 0;
    while cursor < mats.len() {
        let (im, cm) = mats[cursor].clone();
        cursor += 1;
        for (gim, gcm) in gen_lin {
            let nim = im.mul(gim);
            if !index.contains_key(&nim) {
                if mats.len() >= 256 {
                    return Err(EngineError::BadSpec(
                        "linear-part group exceeds 256 elements; not a finite symplectic frame"
                            .to_string(),
                    ));
                }
                index.insert(nim.clone(), mats.len() as u16);
                mats.push((nim, cm.mul(gcm)));
            }
        }
    }
    let n = mats.len();
    let mut part_mul = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            part_mul[i * n + j] = index[&mats[i].0.mul(&mats[j].0)];
        }
    }
    let mut parts: Vec<LinearPart> = Vec::with_capacity(n);
    for (i, (im, cm)) in mats.iter().enumerate() {
        let mut imat_i64 = [[0i64; 4]; 4];
        for (r, row) in imat_i64.iter_mut().enumerate() {
            for (c, slot) in row.iter_mut().enumerate() {
                *slot = int_to_i64(&im[(r, c)]);
            }
        }
        // Order and inverse within the part group.
        let mut order = 1;
        let mut p = i as u16;
        while p != 0 {
            p = part_mul[p as usize * n + i];
            order += 1;
        }
        if i == 0 {
            order = 1;
        }
        let inv = (0..n as u16)
            .find(|&j| part_mul[i * n + j as usize] == 0)
            .expect("every part has an inverse");
        parts.push(LinearPart {
            imat: im.clone(),
            imat_i64,
            cmat: cm.clone(),
            order,
            inv,
        });
    }
    Ok((parts, part_mul, index))
}

fn int_to_i64(x: &crate::Int) -> i64 {
    use num_traits::ToPrimitive;
    x.to_i64().expect("lattice matrix entry fits in i64")
}

#[cfg(test)]
mod tests {
    use super::super::element_order;
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn build(model: &str, level: i64, gens: &[GenSpec]) -> ActionGroup {
        let m = TorusModel::by_name(model).unwrap();
        ActionGroup::new(&m, level, gens, crate::DEFAULT_SIZE_CAP).unwrap()
    }

    #[test]
    fn small_closures() {
        let g = build("e2-i", 3, &[GenSpec::linear_only("neg_id")]);
        assert_eq!(g.order(), 2);
        let g = build("e2-zeta6", 3, &[GenSpec::linear_only("g6")]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.parts().len(), 6);
        let g = build("quaternionic", 3, &[
            GenSpec::linear_only("li"),
            GenSpec::linear_only("lj"),
        ]);
        assert_eq!(g.order(), 8);
        let g = build("quaternionic", 3, &[
            GenSpec::linear_only("li"),
            GenSpec::linear_only("lw"),
        ]);
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn semidirect_closures_with_translations() {
        // g6 together with the order-3 point (1/3, 1/3, 0, 0).
        let g = build("e2-zeta6", 3, &[
            GenSpec::linear_only("g6"),
            GenSpec::translation_only([1, 1, 0, 0]),
        ]);
        assert_eq!(g.order(), 18);
        assert_eq!(g.translation_subgroup().len(), 3);
        assert_eq!(g.g0_abstract().order(), 6);
        // The binary tetrahedral group with a stable 9-point translation
        // plane.
        let g = build("quaternionic", 3, &[
            GenSpec::linear_only("li"),
            GenSpec::linear_only("lw"),
            GenSpec::translation_only([2, 2, 1, 0]),
            GenSpec::translation_only([0, 2, 1, 1]),
        ]);
        assert_eq!(g.order(), 216);
        assert_eq!(g.translation_subgroup().len(), 9);
        assert_eq!(g.g0_abstract().order(), 24);
    }

    #[test]
    fn size_cap_is_enforced() {
        let m = TorusModel::by_name("e2-i").unwrap();
        let gens = vec![
            GenSpec::linear_only("neg_id"),
            GenSpec::translation_only([1, 0, 0, 0]),
            GenSpec::translation_only([0, 1, 0, 0]),
        ];
        let err = ActionGroup::new(&m, 3, &gens, 10).unwrap_err();
        assert!(matches!(err, EngineError::SizeCapExceeded { cap: 10 }));
        assert_eq!(ActionGroup::new(&m, 3, &gens, 100).unwrap().order(), 18);
    }

    #[test]
    fn group_axioms_and_action_compatibility() {
        let g = build("quaternionic", 3, &[
            GenSpec::affine([1, 0, 2, 0], "li"),
            GenSpec::affine([0, 1, 0, 0], "lw"),
        ]);
        let mut rng = StdRng::seed_from_u64(40);
        let n = g.size() as u32;
        for _ in 0..60 {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let c = rng.gen_range(0..n);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            // The torus action is a left action.
            let p = TorsionPoint::from_level(
                [rng.gen_range(0..6), rng.gen_range(0..6), rng.gen_range(0..6), rng.gen_range(0..6)],
                6,
            );
            assert_eq!(g.apply(g.mul(a, b), &p), g.apply(a, &g.apply(b, &p)));
        }
        // Element orders divide the group order.
        for x in 0..n {
            assert_eq!(g.size() as u32 % element_order(&g, x), 0);
        }
    }

    #[test]
    fn subgroup_extraction() {
        let g = build("quaternionic", 3, &[
            GenSpec::linear_only("li"),
            GenSpec::linear_only("lw"),
            GenSpec::translation_only([2, 2, 1, 0]),
            GenSpec::translation_only([0, 2, 1, 1]),
        ]);
        assert_eq!(g.order(), 216);
        // Every cyclic subgroup stands alone with matching structure.
        for x in [1u32, 5, 17, 100, 215] {
            let elems = super::super::closure(&g, &[x]);
            let sub = g.subgroup(&elems);
            assert_eq!(sub.order() as u32, element_order(&g, x));
            assert_eq!(sub.level(), g.level());
            for a in 0..sub.size() as u32 {
                assert_eq!(sub.mul(a, sub.inv(a)), 0);
            }
        }
        // The translation subgroup extracts with a trivial linear frame.
        let tr = g.translation_subgroup();
        let sub = g.subgroup(&tr);
        assert_eq!(sub.order(), 9);
        assert_eq!(sub.parts().len(), 1);
        assert_eq!(sub.g0_abstract().order(), 1);
        // A nontrivial mixed subgroup: the full group, re-extracted.
        let everything: Vec<u32> = (0..g.size() as u32).collect();
        let again = g.subgroup(&everything);
        assert_eq!(again.order(), 216);
        assert_eq!(again.g0_abstract().order(), 24);
        assert!(again.generators().len() <= 5);
    }

    #[test]
    fn level_four_frame() {
        let g = build("e2-i", 4, &[
            GenSpec::linear_only("neg_id"),
            GenSpec::translation_only([2, 0, 0, 0]),
        ]);
        assert_eq!(g.order(), 4);
        let tr = g.translation_subgroup();
        assert_eq!(tr.len(), 2);
        // The translation is 2-torsion at level 4.
        let t = g.translation_of(tr[1]);
        assert_eq!(t.order(), 2);
    }
}
