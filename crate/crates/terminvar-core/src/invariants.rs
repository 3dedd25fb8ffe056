//! Deformation-invariant data of the terminalization `Y` of `K_n(A) / G`:
//! the count of exceptional-surface classes, the second Betti number and the
//! fundamental group of the regular locus.
//!
//! The pipeline is exact end to end.  An affine transformation
//! `g = (t, M)` of the torus induces an automorphism of the generalized
//! Kummer `K_n(A)`; its fixed locus contains a surface precisely for
//!
//! * `n = 2`: every induced involution (linear part `-id`, any 3-torsion
//!   translation), and every order-3 element with nontrivial linear part
//!   whose translation is fixed by the linear part.  Pure translations never
//!   contribute surfaces.
//! * `n = 3`: involutions with linear part `-id` and 2-torsion translation.
//!
//! Each conjugacy class of qualifying involutions adds one exceptional
//! class, each conjugacy class of qualifying order-3 subgroups adds two
//! (one per nontrivial character), minus a correction `epsilon` when an
//! order-4 element fuses the two characters of some order-3 class.

use serde::Serialize;

use crate::algebra::matrix::{exterior_square, Matrix};
use crate::group::abstract_group::AbstractGroup;
use crate::group::action::ActionGroup;
use crate::group::catalogue::Catalogue;
use crate::group::{
    self, conjugacy_class, element_order, normal_closure, quotient, GroupOps,
};
use crate::{EngineError, Rat, Result};

/// The qualifying (surface-contributing) elements of an action group,
/// organized by conjugacy.
#[derive(Clone, Debug)]
pub struct Qualifying {
    /// All qualifying involutions.
    pub involutions: Vec<u32>,
    /// Conjugacy classes of qualifying involutions.
    pub involution_classes: Vec<Vec<u32>>,
    /// All qualifying order-3 elements.
    pub order3: Vec<u32>,
    /// Order-3 subgroups `{g, g^2}` with qualifying generators, deduped.
    pub subgroups3: Vec<[u32; 2]>,
    /// Conjugacy classes of those subgroups.
    pub subgroup3_classes: Vec<Vec<[u32; 2]>>,
}

impl Qualifying {
    /// Number of exceptional classes from involutions.
    pub fn n2(&self) -> usize {
        self.involution_classes.len()
    }
    /// Number of qualifying order-3 subgroup classes.
    pub fn n3(&self) -> usize {
        self.subgroup3_classes.len()
    }
}

/// Computes the qualifying elements for the dimension parameter `n`
/// (2 or 3).
pub fn qualifying(g: &ActionGroup, n: u32) -> Result<Qualifying> {
    assert!(n == 2 || n == 3, "only K_2 and K_3 are modeled");
    assert_eq!(g.level(), n as i64 + 1, "group level must be n + 1");
    let neg_id_cmat = {
        let m: crate::CMat = Matrix::identity(2);
        m.neg()
    };

    let mut involutions = Vec::new();
    let mut order3 = Vec::new();
    for x in 0..g.size() as u32 {
        let ord = element_order(g, x);
        let part = g.part_of(x);
        match ord {
            2 => {
                if part.order == 1 {
                    // A pure 2-torsion translation (possible only at level
                    // 4); translations never contribute surfaces.
                    continue;
                }
                // A finite symplectic involution on V is forced to be -id.
                if part.cmat != neg_id_cmat {
                    return Err(EngineError::Inconsistency(format!(
                        "involution at index {x} has a non-central linear part"
                    )));
                }
                if n == 2 {
                    involutions.push(x);
                } else {
                    // n = 3: the translation must be 2-torsion.
                    if g.translation_of(x).scale(2).is_zero() {
                        involutions.push(x);
                    }
                }
            }
            3 if n == 2 => {
                if part.order == 1 {
                    continue; // pure translation
                }
                // Qualifies iff the linear part fixes the translation.
                let t = g.translation_of(x);
                if t.apply_i64(&part.imat_i64) == t {
                    order3.push(x);
                }
            }
            _ => {}
        }
    }

    // The square of a qualifying order-3 element must itself qualify.
    for &x in &order3 {
        let sq = g.mul(x, x);
        if !order3.contains(&sq) {
            return Err(EngineError::Inconsistency(format!(
                "order-3 element {x} qualifies but its square does not"
            )));
        }
    }

    let involution_classes = partition_into_classes(g, &involutions);
    let mut subgroups3: Vec<[u32; 2]> = Vec::new();
    for &x in &order3 {
        let mut key = [x, g.mul(x, x)];
        key.sort();
        if !subgroups3.contains(&key) {
            subgroups3.push(key);
        }
    }
    subgroups3.sort();
    let subgroup3_classes = partition_subgroups_into_classes(g, &subgroups3);
    Ok(Qualifying {
        involutions,
        involution_classes,
        order3,
        subgroups3,
        subgroup3_classes,
    })
}

fn partition_into_classes(g: &ActionGroup, elems: &[u32]) -> Vec<Vec<u32>> {
    let mut remaining: Vec<u32> = elems.to_vec();
    let mut out = Vec::new();
    while let Some(&x) = remaining.first() {
        let class = conjugacy_class(g, x);
        // Every conjugate of a qualifying element must be in the pool.
        debug_assert!(class.iter().all(|y| elems.contains(y)));
        remaining.retain(|y| !class.contains(y));
        out.push(class);
    }
    out
}

fn partition_subgroups_into_classes(g: &ActionGroup, subs: &[[u32; 2]]) -> Vec<Vec<[u32; 2]>> {
    let gens = g.generators();
    let mut remaining: Vec<[u32; 2]> = subs.to_vec();
    let mut out = Vec::new();
    while let Some(&start) = remaining.first() {
        // Orbit of the subgroup under conjugation.
        let mut orbit: Vec<[u32; 2]> = vec![start];
        let mut frontier = vec![start];
        while let Some(s) = frontier.pop() {
            for &c in &gens {
                let mut img = [
                    g.mul(g.mul(c, s[0]), g.inv(c)),
                    g.mul(g.mul(c, s[1]), g.inv(c)),
                ];
                img.sort();
                if !orbit.contains(&img) {
                    orbit.push(img);
                    frontier.push(img);
                }
            }
        }
        remaining.retain(|s| !orbit.contains(s));
        orbit.sort();
        out.push(orbit);
    }
    out
}

/// Rank of the `G`-invariant part of `H^2` of the Kummer: the invariants of
/// the linear parts on the second exterior power of the lattice, plus one
/// for the class of the exceptional fiber direction.
pub fn invariant_lattice_rank(g: &ActionGroup) -> usize {
    let id6: Matrix<Rat> = Matrix::identity(6);
    let blocks: Vec<Matrix<Rat>> = g
        .parts()
        .iter()
        .map(|part| {
            exterior_square(&part.imat)
                .map(|e| Rat::from_integer(e.clone()))
                .sub(&id6)
        })
        .collect();
    let constrained = Matrix::vstack(&blocks).rank();
    (6 - constrained) + 1
}

/// The fused-characters correction: 1 when some order-4 element conjugates
/// a qualifying order-3 element to its square, 0 otherwise.
pub fn epsilon(g: &ActionGroup, qual: &Qualifying) -> usize {
    if qual.order3.is_empty() {
        return 0;
    }
    let order4: Vec<u32> = (0..g.size() as u32)
        .filter(|&x| element_order(g, x) == 4)
        .collect();
    for &q in &qual.order3 {
        let q2 = g.mul(q, q);
        for &iota in &order4 {
            if g.mul(g.mul(iota, q), g.inv(iota)) == q2 {
                return 1;
            }
        }
    }
    0
}

/// The singularity gate of the terminalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gate {
    /// `X = K_n(A)/G` is already terminal (no qualifying elements).
    Terminal,
    /// `X` is canonical but not terminal; `Y -> X` contracts surfaces.
    StrictlyCanonical,
}

impl Gate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Gate::Terminal => "terminal",
            Gate::StrictlyCanonical => "strictly-canonical",
        }
    }
}

/// The full invariant record of one quotient.
#[derive(Clone, Debug, Serialize)]
pub struct KummerInvariants {
    /// Dimension parameter (`K_n`, n = 2 or 3).
    pub n: u32,
    /// Order of the acting group.
    pub group_order: usize,
    /// Order of the translation subgroup.
    pub g_tr_order: usize,
    /// Catalogue name of the linear image `G_0`.
    pub g0: String,
    /// Rank of the invariant lattice.
    pub rank: usize,
    /// Conjugacy classes of qualifying involutions.
    pub n2: usize,
    /// Conjugacy classes of qualifying order-3 subgroups.
    pub n3: usize,
    /// Fused-characters correction.
    pub epsilon: usize,
    /// Second Betti number of the terminalization.
    pub b2: usize,
    /// Third Betti number (zero whenever `G_0` is nontrivial).
    pub b3: usize,
    /// Catalogue name of the fundamental group of the regular locus.
    pub pi1: String,
    /// Its order.
    pub pi1_order: usize,
    /// Terminal vs strictly canonical.
    pub gate: Gate,
}

/// Computes every invariant of the terminalization of `K_n(A) / G`.
pub fn compute(g: &ActionGroup, n: u32) -> Result<KummerInvariants> {
    let cat = Catalogue::new();
    let g0_abs = g.g0_abstract();
    if g0_abs.order() == 1 {
        return Err(EngineError::BadSpec(
            "the action is purely translational; the quotient is another Kummer, not modeled here"
                .to_string(),
        ));
    }
    let g0 = cat.identify(&g0_abs).ok_or_else(|| {
        EngineError::Inconsistency(format!(
            "linear image of order {} is not a catalogued frame group",
            g0_abs.order()
        ))
    })?;

    let qual = qualifying(g, n)?;
    let rank = invariant_lattice_rank(g);
    let eps = epsilon(g, &qual);
    let b2 = rank + qual.n2() + 2 * qual.n3() - eps;

    // pi_1 of the regular locus: the quotient by the normal closure of all
    // qualifying elements.
    let mut seed: Vec<u32> = qual.involutions.clone();
    seed.extend(qual.order3.iter().copied());
    let pi1_group: AbstractGroup = if seed.is_empty() {
        group::subgroup_abstract(g, &(0..g.size() as u32).collect::<Vec<_>>())
    } else {
        let ncl = normal_closure(g, &seed);
        quotient(g, &ncl)
    };
    let pi1 = cat.identify(&pi1_group).ok_or_else(|| {
        EngineError::Inconsistency(format!(
            "fundamental group of order {} is not catalogued",
            pi1_group.order()
        ))
    })?;

    let gate = if qual.n2() + qual.n3() == 0 {
        Gate::Terminal
    } else {
        Gate::StrictlyCanonical
    };

    Ok(KummerInvariants {
        n,
        group_order: g.order(),
        g_tr_order: g.translation_subgroup().len(),
        g0: g0.to_string(),
        rank,
        n2: qual.n2(),
        n3: qual.n3(),
        epsilon: eps,
        b2,
        b3: 0,
        pi1: pi1.to_string(),
        pi1_order: pi1_group.order(),
        gate,
    })
}
