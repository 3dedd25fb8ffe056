//! Isolated fixed points of induced automorphisms on the generalized Kummer
//! fourfold `K_2(A)`, and membership tests against the fixed surfaces.
//!
//! Points of `K_2(A)` are length-3 subschemes of the abelian surface with
//! sum zero.  The combinatorial site types that can arise as isolated fixed
//! points of an induced automorphism are:
//!
//! * [`Site::Triple`] — three distinct points `{x, y, z}`, `x + y + z = 0`;
//! * [`Site::CurveFiber`] — a doubled point `x` with tangent line `l` plus
//!   the residual point `-2x` (requires `3x != 0`);
//! * [`Site::Punctual`] — the square of the maximal ideal at a 3-torsion
//!   point `x` (the cone vertex of the punctual Hilbert scheme);
//! * [`Site::Pv`] — a boundary point of the punctual cone over a 3-torsion
//!   point: a ruling endpoint with tangent line `l`.
//!
//! For each nontrivial group element the emitter walks every cycle type a
//! fixed subscheme can have, keeps the genuinely isolated points and skips
//! components that sweep out curves inside the qualifying fixed surfaces.
//! The counting identities (36 sites for an induced involution, 12 for a
//! qualifying order-3 element, 27 coset triples for a 3-torsion translation)
//! are enforced by the test suite.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::cyclotomic::{eigen_lines, CycNumber, Line};
use crate::algebra::matrix::Matrix;
use crate::algebra::snf::{solve_congruence, CongruenceSolutions};
use crate::algebra::torsion::{points_of_level, TorsionPoint};
use crate::group::action::ActionGroup;
use crate::group::GroupOps;
use crate::{EngineError, IMat, Rat, Result};

/// An isolated fixed-point candidate on `K_2(A)`, in canonical form so that
/// pooling across group elements dedupes structurally.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Site {
    /// Three distinct points with sum zero.
    Triple(BTreeSet<TorsionPoint>),
    /// Doubled point `x` with tangent line `l` (plus the residual `-2x`).
    CurveFiber(TorsionPoint, Line),
    /// The fat point `m_x^2` at a 3-torsion point.
    Punctual(TorsionPoint),
    /// A punctual-cone ruling endpoint at a 3-torsion point.
    Pv(TorsionPoint, Line),
}

impl Site {
    /// A short kind label for reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Site::Triple(_) => "triple",
            Site::CurveFiber(_, _) => "curve-fiber",
            Site::Punctual(_) => "punctual",
            Site::Pv(_, _) => "pv",
        }
    }
}

/// The finite fixed-point set of an element on the abelian surface itself.
/// Errors if the fixed locus is positive-dimensional.
pub fn fixed_points_on_surface(g: &ActionGroup, idx: u32) -> Result<Vec<TorsionPoint>> {
    let part = g.part_of(idx);
    let m_minus_1: IMat = part.imat.sub(&Matrix::identity(4));
    let alpha = g.translation_of(idx);
    let target: Vec<Rat> = alpha.neg().c.to_vec();
    match solve_congruence(&m_minus_1, &target) {
        CongruenceSolutions::Empty => Ok(Vec::new()),
        CongruenceSolutions::Finite(sols) => Ok(sols
            .into_iter()
            .map(|v| TorsionPoint::new([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]))
            .collect()),
        CongruenceSolutions::Infinite => Err(EngineError::Inconsistency(format!(
            "element {idx} fixes a positive-dimensional locus on the surface"
        ))),
    }
}

/// The image of a site under a group element.
pub fn site_image(g: &ActionGroup, h: u32, site: &Site) -> Site {
    let cmat = &g.part_of(h).cmat;
    match site {
        Site::Triple(support) => {
            Site::Triple(support.iter().map(|p| g.apply(h, p)).collect())
        }
        Site::CurveFiber(x, l) => Site::CurveFiber(g.apply(h, x), l.apply(cmat)),
        Site::Punctual(x) => Site::Punctual(g.apply(h, x)),
        Site::Pv(x, l) => Site::Pv(g.apply(h, x), l.apply(cmat)),
    }
}

/// All isolated fixed points of the induced automorphism of `K_2(A)` for
/// the (nontrivial) element at `idx`.
pub fn isolated_sites(g: &ActionGroup, idx: u32) -> Result<Vec<Site>> {
    assert_eq!(g.level(), 3, "isolated sites are a K_2 computation");
    assert_ne!(idx, 0, "the identity fixes everything");
    let part = g.part_of(idx);
    let alpha = g.translation_of(idx);
    let mut sites: BTreeSet<Site> = BTreeSet::new();

    if part.order == 1 {
        // Pure 3-torsion translation: the fixed triples are the cosets of
        // the translation subgroup it generates, anchored at 3-torsion.
        debug_assert_eq!(alpha.order(), 3);
        for x in points_of_level(3) {
            let triple: BTreeSet<TorsionPoint> =
                [x.clone(), x.add(&alpha), x.add(&alpha).add(&alpha)]
                    .into_iter()
                    .collect();
            debug_assert_eq!(triple.len(), 3);
            sites.insert(Site::Triple(triple));
        }
        return Ok(sites.into_iter().collect());
    }

    let neg_id: crate::CMat = Matrix::identity(2).neg();
    if part.cmat == neg_id {
        // Induced involution t_b(-id).  Pointwise-fixed triples come from
        // the 16 solutions of 2x = b; triples through -b degenerate, which
        // leaves exactly 35, none on the fixed surface.  The doubled-point
        // fibers over the 15 non-3-torsion solutions sweep curves inside
        // the fixed surface; the punctual cone at -b contributes only the
        // vertex.
        let fix = fixed_points_on_surface(g, idx)?;
        debug_assert_eq!(fix.len(), 16);
        emit_pointwise_triples(&fix, &mut sites);
        debug_assert_eq!(sites.len(), 35);
        let vertex = alpha.neg();
        debug_assert!(vertex.scale(3).is_zero());
        sites.insert(Site::Punctual(vertex));
        return Ok(sites.into_iter().collect());
    }

    // Nontrivial, non-central linear part (order 3, 4 or 6 on the lattice).
    let fix_g = fixed_points_on_surface(g, idx)?;
    let fix_g_set: BTreeSet<TorsionPoint> = fix_g.iter().cloned().collect();

    // Pointwise-fixed triples.
    emit_pointwise_triples(&fix_g, &mut sites);

    // Fixed-point-swap-pair triples {x, gx, z} with z in Fix(g): the pair
    // comes from Fix(g^2) \ Fix(g).
    let g2 = g.mul(idx, idx);
    if g2 != 0 && g2 != idx {
        for x in fixed_points_on_surface(g, g2)? {
            if fix_g_set.contains(&x) {
                continue;
            }
            let gx = g.apply(idx, &x);
            let z = x.add(&gx).neg();
            if !fix_g_set.contains(&z) || z == x || z == gx {
                continue;
            }
            let support: BTreeSet<TorsionPoint> = [x, gx, z].into_iter().collect();
            debug_assert_eq!(support.len(), 3);
            sites.insert(Site::Triple(support));
        }
    }

    // Three-cycled triples {x, gx, g^2 x} with sum zero: solve
    // (I + M + M^2) x = -(M + 2) a, then demand a genuine 3-cycle.
    let m = &part.imat;
    let id4: IMat = Matrix::identity(4);
    let sum_mat = id4.add(m).add(&m.mul(m));
    let two_id: IMat = Matrix::identity(4).scale(&crate::int(2));
    let target_pt = alpha.apply(&m.add(&two_id)).neg();
    let g3 = g.mul(g2, idx);
    match solve_congruence(&sum_mat, &target_pt.c.to_vec()) {
        CongruenceSolutions::Empty => {}
        CongruenceSolutions::Infinite => {
            // A continuum of cycled triples is exactly the fixed surface of
            // a qualifying order-3 element; nothing is isolated here.
            let t_fixes_alpha = alpha.apply_i64(&part.imat_i64) == alpha;
            if part.order != 3 || !t_fixes_alpha {
                return Err(EngineError::Inconsistency(format!(
                    "unexpected continuum of cycled triples for element {idx}"
                )));
            }
        }
        CongruenceSolutions::Finite(sols) => {
            for v in sols {
                let x = TorsionPoint::new([
                    v[0].clone(),
                    v[1].clone(),
                    v[2].clone(),
                    v[3].clone(),
                ]);
                if g.apply(g3, &x) != x || fix_g_set.contains(&x) {
                    continue;
                }
                let gx = g.apply(idx, &x);
                let ggx = g.apply(idx, &gx);
                let support: BTreeSet<TorsionPoint> =
                    [x, gx, ggx].into_iter().collect();
                debug_assert_eq!(support.len(), 3);
                debug_assert!(sum_is_zero(&support));
                sites.insert(Site::Triple(support));
            }
        }
    }

    // Doubled-point and punctual sites over the fixed points of g itself.
    let lines = eigen_lines(&part.cmat);
    debug_assert_eq!(lines.len(), 2, "non-central part has two eigenlines");
    let qualifying_order3 = part.order == 3 && alpha.apply_i64(&part.imat_i64) == alpha;
    for x in &fix_g {
        if !x.scale(3).is_zero() {
            for (_, l) in &lines {
                sites.insert(Site::CurveFiber(x.clone(), l.clone()));
            }
        } else if qualifying_order3 {
            // The punctual cone at a 3-torsion fixed point of a qualifying
            // order-3 element lies inside its fixed surface: nothing
            // isolated.
        } else if part.order == 3 {
            return Err(EngineError::Inconsistency(format!(
                "non-qualifying order-3 element {idx} fixes a 3-torsion point"
            )));
        } else {
            sites.insert(Site::Punctual(x.clone()));
            for (_, l) in &lines {
                sites.insert(Site::Pv(x.clone(), l.clone()));
            }
        }
    }

    Ok(sites.into_iter().collect())
}

fn sum_is_zero(support: &BTreeSet<TorsionPoint>) -> bool {
    let mut acc = TorsionPoint::zero();
    for p in support {
        acc = acc.add(p);
    }
    acc.is_zero()
}

/// Emits all triples of distinct pointwise-fixed points with sum zero.
fn emit_pointwise_triples(fix: &[TorsionPoint], sites: &mut BTreeSet<Site>) {
    let set: BTreeSet<TorsionPoint> = fix.iter().cloned().collect();
    for (i, x) in fix.iter().enumerate() {
        for y in fix.iter().skip(i + 1) {
            let z = x.add(y).neg();
            if z == *x || z == *y || !set.contains(&z) {
                continue;
            }
            let support: BTreeSet<TorsionPoint> =
                [x.clone(), y.clone(), z].into_iter().collect();
            sites.insert(Site::Triple(support));
        }
    }
}

// ---------------------------------------------------------------------------
// Membership in qualifying fixed surfaces
// ---------------------------------------------------------------------------

/// Whether a site lies on the fixed surface of the qualifying involution at
/// `inv_idx` (linear part `-id`, translation `b`).
pub fn on_involution_surface(g: &ActionGroup, inv_idx: u32, site: &Site) -> bool {
    let beta = g.translation_of(inv_idx);
    let anchor = beta.neg();
    match site {
        // The surface consists of triples {-b, y, b - y}; a sum-zero triple
        // through -b automatically has that shape.
        Site::Triple(support) => support.contains(&anchor),
        // Whole doubled-point fibers over involution-fixed base points lie
        // on the surface.
        Site::CurveFiber(x, _) => g.apply(inv_idx, x) == *x,
        // The cone vertex is never on an involution surface.
        Site::Punctual(_) => false,
        // The surface meets the punctual cone at -b away from the vertex,
        // crossing every ruling.
        Site::Pv(x, _) => *x == anchor,
    }
}

/// Whether a site lies on the fixed surface of the qualifying order-3
/// subgroup generated by the element at `q_idx`.
pub fn on_order3_surface(g: &ActionGroup, q_idx: u32, site: &Site) -> bool {
    debug_assert_eq!(g.part_of(q_idx).order, 3);
    match site {
        // The surface is the closure of the cycled triples.
        Site::Triple(support) => {
            let image: BTreeSet<TorsionPoint> =
                support.iter().map(|p| g.apply(q_idx, p)).collect();
            if image != *support {
                return false;
            }
            let first = support.iter().next().unwrap();
            g.apply(q_idx, first) != *first
        }
        Site::CurveFiber(_, _) => false,
        // The punctual cone over a fixed 3-torsion point lies entirely on
        // the surface: vertex and ruling endpoints along eigenlines.
        Site::Punctual(x) => g.apply(q_idx, x) == *x,
        Site::Pv(x, l) => {
            if g.apply(q_idx, x) != *x {
                return false;
            }
            eigen_lines(&g.part_of(q_idx).cmat)
                .iter()
                .any(|(_, el)| el == l)
        }
    }
}

/// Convenience: eigenline table per linear-part index, memoized by the
/// caller when iterating many elements.
pub fn part_eigen_lines(g: &ActionGroup) -> BTreeMap<u16, Vec<(CycNumber, Line)>> {
    let mut out = BTreeMap::new();
    let neg_id: crate::CMat = Matrix::identity(2).neg();
    for (i, part) in g.parts().iter().enumerate() {
        if part.cmat != neg_id && !part.imat.is_identity() {
            out.insert(i as u16, eigen_lines(&part.cmat));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::action::GenSpec;
    use crate::group::element_order;
    use crate::group::GroupOps;
    use crate::models::TorusModel;

    fn build(model: &str, gens: &[GenSpec]) -> ActionGroup {
        let m = TorusModel::by_name(model).unwrap();
        ActionGroup::new(&m, 3, gens, crate::DEFAULT_SIZE_CAP).unwrap()
    }

    fn kind_counts(sites: &[Site]) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for s in sites {
            *out.entry(s.kind()).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn pure_translation_emits_coset_triples() {
        let g = build("e2-i", &[
            GenSpec::linear_only("neg_id"),
            GenSpec::translation_only([1, 0, 0, 0]),
        ]);
        let tau = (0..g.size() as u32)
            .find(|&i| g.part_of(i).imat.is_identity() && i != 0)
            .unwrap();
        let sites = isolated_sites(&g, tau).unwrap();
        assert_eq!(sites.len(), 27);
        assert!(sites.iter().all(|s| s.kind() == "triple"));
    }

    #[test]
    fn involution_emits_36() {
        // Translation-free involution.
        let g = build("e2-i", &[GenSpec::linear_only("neg_id")]);
        let sites = isolated_sites(&g, 1).unwrap();
        assert_eq!(sites.len(), 36);
        let counts = kind_counts(&sites);
        assert_eq!(counts["triple"], 35);
        assert_eq!(counts["punctual"], 1);
        assert!(sites.contains(&Site::Punctual(TorsionPoint::zero())));
        // With a 3-torsion translation: still 36, vertex moves to -b.
        let g = build("e2-i", &[
            GenSpec::linear_only("neg_id"),
            GenSpec::translation_only([1, 0, 0, 0]),
        ]);
        let iota = (0..g.size() as u32)
            .find(|&i| {
                element_order(&g, i) == 2 && !g.translation_of(i).is_zero()
            })
            .unwrap();
        let sites = isolated_sites(&g, iota).unwrap();
        assert_eq!(sites.len(), 36);
        let b = g.translation_of(iota);
        assert!(sites.contains(&Site::Punctual(b.neg())));
    }

    #[test]
    fn order_four_emits_16_split_evenly_by_surface_membership() {
        let g = build("e2-i", &[GenSpec::linear_only("g4")]);
        let g4 = g.generators()[0];
        let sites = isolated_sites(&g, g4).unwrap();
        assert_eq!(sites.len(), 16);
        let counts = kind_counts(&sites);
        assert_eq!(counts["triple"], 7);
        assert_eq!(counts["curve-fiber"], 6);
        assert_eq!(counts["punctual"], 1);
        assert_eq!(counts["pv"], 2);
        // Membership against the square's surface (the induced involution).
        let inv = g.mul(g4, g4);
        assert_eq!(element_order(&g, inv), 2);
        let on: Vec<bool> = sites
            .iter()
            .map(|s| on_involution_surface(&g, inv, s))
            .collect();
        assert_eq!(on.iter().filter(|&&b| b).count(), 8);
        assert_eq!(on.iter().filter(|&&b| !b).count(), 8);
    }

    #[test]
    fn order_six_emits_12_with_correct_surface_splits() {
        let g = build("e2-zeta6", &[GenSpec::linear_only("g6")]);
        let g6 = g.generators()[0];
        let sites = isolated_sites(&g, g6).unwrap();
        assert_eq!(sites.len(), 12);
        let counts = kind_counts(&sites);
        assert_eq!(counts["triple"], 9);
        assert_eq!(counts["punctual"], 1);
        assert_eq!(counts["pv"], 2);
        assert!(!counts.contains_key("curve-fiber"));
        // Membership splits against the two qualifying surfaces in <g6>.
        let inv = g.mul(g.mul(g6, g6), g6); // g6^3 = -id
        let q = g.mul(g6, g6); // order-3
        assert_eq!(element_order(&g, inv), 2);
        assert_eq!(element_order(&g, q), 3);
        let mut both = 0;
        let mut only_inv = 0;
        let mut only_q = 0;
        let mut neither = 0;
        for s in &sites {
            let a = on_involution_surface(&g, inv, s);
            let b = on_order3_surface(&g, q, s);
            match (a, b) {
                (true, true) => both += 1,
                (true, false) => only_inv += 1,
                (false, true) => only_q += 1,
                (false, false) => neither += 1,
            }
        }
        assert_eq!((both, only_inv, only_q, neither), (2, 4, 6, 0));
    }

    #[test]
    fn qualifying_order3_emits_12_line_triples() {
        let g = build("e2-zeta3", &[GenSpec::linear_only("g3")]);
        let q = g.generators()[0];
        let sites = isolated_sites(&g, q).unwrap();
        assert_eq!(sites.len(), 12);
        assert!(sites.iter().all(|s| s.kind() == "triple"));
        // None of them lie on the element's own surface...
        assert!(sites.iter().all(|s| !on_order3_surface(&g, q, s)));
        // ...and the fixed points on the surface are all 3-torsion.
        for x in fixed_points_on_surface(&g, q).unwrap() {
            assert!(x.scale(3).is_zero());
        }
    }

    #[test]
    fn non_qualifying_order3_emits_27() {
        let g = build("e2-zeta3", &[GenSpec::affine([1, 0, 0, 0], "g3")]);
        let q = g.generators()[0];
        assert_eq!(element_order(&g, q), 3);
        let sites = isolated_sites(&g, q).unwrap();
        assert_eq!(sites.len(), 27);
        let counts = kind_counts(&sites);
        assert_eq!(counts["triple"], 9);
        assert_eq!(counts["curve-fiber"], 18);
        // The nine triples sit over 9-torsion (not 3-torsion) base points.
        for x in fixed_points_on_surface(&g, q).unwrap() {
            assert_eq!(x.order(), 9);
        }
    }

    #[test]
    fn site_images_respect_the_action() {
        let g = build("e2-zeta6", &[GenSpec::linear_only("g6"), GenSpec::linear_only("h")]);
        let g6 = g.generators()[0];
        let h = g.generators()[1];
        let sites = isolated_sites(&g, g6).unwrap();
        // h conjugates g6 to g6^{-1} = g6^5, so it maps Fix(g6) sites to
        // Fix(g6) sites (as a set).
        let image: BTreeSet<Site> = sites.iter().map(|s| site_image(&g, h, s)).collect();
        let original: BTreeSet<Site> = sites.into_iter().collect();
        assert_eq!(image, original);
    }
}
