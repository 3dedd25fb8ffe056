//! Singularity census of the terminalization.
//!
//! For `K_2(A)/G` the quotient is singular along the images of the
//! qualifying fixed surfaces and at finitely many isolated points.  The
//! terminalization resolves the surfaces; what remains at each isolated
//! orbit is decided by a local transfer rule keyed on the stabilizer type
//! and the multiset of qualifying surfaces through the point.  The counts
//! `a2`, `a3`, `a4` tally the residual terminal cyclic-quotient points of
//! local order 2, 3 and 4.
//!
//! For `K_3(A)/G` (level-4 translations and `-id` only) the analogous
//! isolated census counts `a2` via pointwise-fixed sum-zero quadruples
//! whose stabilizer is exactly one involution, and `s2` counts the extra
//! exceptional surfaces of the chosen terminalization that are not
//! absorbed by a pair of qualifying fixed fourfolds.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::torsion::{points_of_level, TorsionPoint};
use crate::fixed_loci::{
    fixed_points_on_surface, isolated_sites, on_involution_surface, on_order3_surface,
    site_image, Site,
};
use crate::group::action::ActionGroup;
use crate::group::catalogue::Catalogue;
use crate::group::{subgroup_abstract, GroupOps};
use crate::invariants::qualifying;
use crate::{EngineError, Result};

/// The residual contribution of one isolated orbit, per local model.
/// Keys are (stabilizer type, sorted multiset of incident surface types).
/// Returns `(a2, a3, a4)` or `None` when no rule is known.
pub fn transfer(stabilizer: &str, incident: &[&'static str]) -> Option<(u64, u64, u64)> {
    match (stabilizer, incident) {
        ("C2", []) => Some((1, 0, 0)),
        ("C3", []) => Some((0, 1, 0)),
        ("C4", []) => Some((0, 0, 1)),
        ("C4", ["A1"]) => Some((2, 0, 0)),
        ("C6", ["A1"]) => Some((0, 2, 0)),
        ("C6", ["A2"]) => Some((3, 0, 0)),
        ("C6", ["A1", "A2"]) => Some((0, 0, 0)),
        ("C3^2", ["A2", "A2"]) => Some((0, 0, 0)),
        ("S3", ["A1", "A1", "A1"]) => Some((0, 0, 0)),
        ("C3xS3", ["A1", "A1", "A1", "A2", "A2"]) => Some((0, 0, 0)),
        ("BT24", ["A2", "A2", "A2", "A2"]) => Some((0, 0, 0)),
        _ => None,
    }
}

/// One orbit of isolated fixed points on `K_2(A)`.
#[derive(Clone, Debug)]
pub struct OrbitClass {
    /// Canonical representative (smallest site in the orbit).
    pub rep: Site,
    pub orbit_size: usize,
    /// Catalogue name of the stabilizer of the representative.
    pub stabilizer: &'static str,
    /// Sorted multiset of qualifying surfaces through the representative.
    pub incident: Vec<&'static str>,
    /// Residual `(a2, a3, a4)` per the transfer rule, if known.
    pub contribution: Option<(u64, u64, u64)>,
}

impl OrbitClass {
    /// A printable local-model key such as `(C6, [A1,A2])`.
    pub fn key(&self) -> String {
        format!("({}, [{}])", self.stabilizer, self.incident.join(","))
    }
}

/// The complete isolated census of `K_2(A)/G`.
#[derive(Clone, Debug)]
pub struct CensusN2 {
    pub orbits: Vec<OrbitClass>,
    /// Conjugacy classes of qualifying involutions (surface count check).
    pub n2: usize,
    /// Conjugacy classes of qualifying order-3 subgroups.
    pub n3: usize,
}

impl CensusN2 {
    /// Sums the residual contributions, erroring on any unknown local model.
    pub fn totals(&self) -> Result<(u64, u64, u64)> {
        let mut a = (0, 0, 0);
        for orbit in &self.orbits {
            match orbit.contribution {
                Some((a2, a3, a4)) => {
                    a.0 += a2;
                    a.1 += a3;
                    a.2 += a4;
                }
                None => {
                    return Err(EngineError::UnknownLocalModel(orbit.key()));
                }
            }
        }
        Ok(a)
    }

    /// Whether the terminalization is smooth (no residual points).
    pub fn smooth(&self) -> Result<bool> {
        Ok(self.totals()? == (0, 0, 0))
    }

    /// Orbits fixed by the whole group, with their `(A1, A2)` incidence
    /// counts: the data of the invariant-locus table.
    pub fn group_fixed(&self) -> Vec<(&Site, usize, usize)> {
        self.orbits
            .iter()
            .filter(|o| o.orbit_size == 1)
            .map(|o| {
                let a1 = o.incident.iter().filter(|s| **s == "A1").count();
                let a2 = o.incident.iter().filter(|s| **s == "A2").count();
                (&o.rep, a1, a2)
            })
            .collect()
    }
}

/// Runs the isolated census for `K_2(A)/G`.
pub fn census_n2(g: &ActionGroup) -> Result<CensusN2> {
    assert_eq!(g.level(), 3, "the isolated census is a K_2 computation");
    let qual = qualifying(g, 2)?;

    let mut pool: BTreeSet<Site> = BTreeSet::new();
    for idx in 1..g.size() as u32 {
        pool.extend(isolated_sites(g, idx)?);
    }

    let catalogue = Catalogue::new();
    let gens = g.generators();
    let mut orbits = Vec::new();
    while let Some(rep) = pool.iter().next().cloned() {
        let mut orbit: BTreeSet<Site> = BTreeSet::new();
        orbit.insert(rep.clone());
        let mut frontier = vec![rep.clone()];
        while let Some(s) = frontier.pop() {
            for &h in &gens {
                let img = site_image(g, h, &s);
                if orbit.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        for s in &orbit {
            assert!(pool.remove(s), "orbit left the pooled site set");
        }

        let stab: Vec<u32> = (0..g.size() as u32)
            .filter(|&h| site_image(g, h, &rep) == rep)
            .collect();
        assert_eq!(
            stab.len() * orbit.len(),
            g.size(),
            "orbit-stabilizer mismatch"
        );
        let stab_group = subgroup_abstract(g, &stab);
        let stabilizer = catalogue.identify(&stab_group).ok_or_else(|| {
            EngineError::Inconsistency(format!(
                "unrecognized stabilizer of order {}",
                stab.len()
            ))
        })?;

        let mut incident: Vec<&'static str> = Vec::new();
        for &i in &qual.involutions {
            if on_involution_surface(g, i, &rep) {
                incident.push("A1");
            }
        }
        for pair in &qual.subgroups3 {
            if on_order3_surface(g, pair[0], &rep) {
                incident.push("A2");
            }
        }
        incident.sort();

        let contribution = transfer(stabilizer, &incident);
        orbits.push(OrbitClass {
            rep,
            orbit_size: orbit.len(),
            stabilizer,
            incident,
            contribution,
        });
    }

    Ok(CensusN2 {
        orbits,
        n2: qual.n2(),
        n3: qual.n3(),
    })
}

/// The isolated and surface census of `K_3(A)/G`.
#[derive(Clone, Debug)]
pub struct CensusN3 {
    /// Orbits of pointwise-fixed sum-zero quadruples, as (stabilizer
    /// order, orbit count) pairs.
    pub quadruple_orbits: BTreeMap<usize, usize>,
    pub a2: u64,
    pub s2: u64,
}

impl CensusN3 {
    pub fn smooth(&self) -> bool {
        self.a2 == 0 && self.s2 == 0
    }
}

/// Runs the census for `K_3(A)/G` where `G` is generated by `-id` and
/// 2-torsion translations.
pub fn census_n3(g: &ActionGroup) -> Result<CensusN3> {
    assert_eq!(g.level(), 4, "the quadruple census is a K_3 computation");
    let qual = qualifying(g, 3)?;

    // Pool the pointwise-fixed sum-zero quadruples of every qualifying
    // involution.  Each quadruple determines its involution (2x = b), so
    // the per-element pools are disjoint.
    let mut pool: BTreeSet<BTreeSet<TorsionPoint>> = BTreeSet::new();
    for &i in &qual.involutions {
        let fix = fixed_points_on_surface(g, i)?;
        assert_eq!(fix.len(), 16);
        let set: BTreeSet<TorsionPoint> = fix.iter().cloned().collect();
        for a in 0..fix.len() {
            for b in (a + 1)..fix.len() {
                for c in (b + 1)..fix.len() {
                    let d = fix[a].add(&fix[b]).add(&fix[c]).neg();
                    if d == fix[a] || d == fix[b] || d == fix[c] || !set.contains(&d) {
                        continue;
                    }
                    let quad: BTreeSet<TorsionPoint> =
                        [fix[a].clone(), fix[b].clone(), fix[c].clone(), d]
                            .into_iter()
                            .collect();
                    debug_assert_eq!(quad.len(), 4);
                    pool.insert(quad);
                }
            }
        }
    }

    let gens = g.generators();
    let mut quadruple_orbits: BTreeMap<usize, usize> = BTreeMap::new();
    let mut a2 = 0u64;
    while let Some(rep) = pool.iter().next().cloned() {
        let mut orbit: BTreeSet<BTreeSet<TorsionPoint>> = BTreeSet::new();
        orbit.insert(rep.clone());
        let mut frontier = vec![rep.clone()];
        while let Some(s) = frontier.pop() {
            for &h in &gens {
                let img: BTreeSet<TorsionPoint> = s.iter().map(|p| g.apply(h, p)).collect();
                if orbit.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        for s in &orbit {
            assert!(pool.remove(s), "orbit left the pooled quadruple set");
        }
        let stab = (0..g.size() as u32)
            .filter(|&h| {
                rep.iter().map(|p| g.apply(h, p)).collect::<BTreeSet<_>>() == rep
            })
            .count();
        assert_eq!(stab * orbit.len(), g.size(), "orbit-stabilizer mismatch");
        *quadruple_orbits.entry(stab).or_insert(0) += 1;
        // Residual point iff nothing beyond the fixing involution
        // stabilizes the quadruple; larger stabilizers place it on a
        // positive-dimensional stratum.
        if stab == 2 {
            a2 += 1;
        }
    }

    // Exceptional surfaces: one for each nonzero translation t and each
    // 2-torsion class mod <t>, minus those absorbed between a pair of
    // qualifying fixed fourfolds (classes meeting the translation group).
    let translations: BTreeSet<TorsionPoint> = g
        .translation_subgroup()
        .iter()
        .map(|&i| g.translation_of(i))
        .collect();
    for t in &translations {
        if !t.scale(2).is_zero() {
            return Err(EngineError::BadSpec(
                "K_3 census requires 2-torsion translations".into(),
            ));
        }
    }
    let two_torsion = points_of_level(2);
    let mut s2 = 0u64;
    for t in translations.iter().filter(|t| !t.is_zero()) {
        let mut seen: BTreeSet<TorsionPoint> = BTreeSet::new();
        for theta in &two_torsion {
            let partner = theta.add(t);
            let class_rep = std::cmp::min(theta.clone(), partner);
            if !seen.insert(class_rep) {
                continue;
            }
            if !translations.contains(theta) {
                s2 += 1;
            }
        }
    }

    Ok(CensusN3 {
        quadruple_orbits,
        a2,
        s2,
    })
}

/// The ADE configuration of the quotient surface `A/G` by McKay
/// correspondence on the point stabilizers.
pub fn surface_quotient_ade(g: &ActionGroup) -> Result<BTreeMap<&'static str, usize>> {
    let mut pool: BTreeSet<TorsionPoint> = BTreeSet::new();
    for idx in 1..g.size() as u32 {
        pool.extend(fixed_points_on_surface(g, idx)?);
    }
    let catalogue = Catalogue::new();
    let gens = g.generators();
    let mut out: BTreeMap<&'static str, usize> = BTreeMap::new();
    while let Some(rep) = pool.iter().next().cloned() {
        let mut orbit: BTreeSet<TorsionPoint> = BTreeSet::new();
        orbit.insert(rep.clone());
        let mut frontier = vec![rep.clone()];
        while let Some(p) = frontier.pop() {
            for &h in &gens {
                let img = g.apply(h, &p);
                if orbit.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        for p in &orbit {
            pool.remove(p);
        }
        let stab: Vec<u32> = (0..g.size() as u32)
            .filter(|&h| g.apply(h, &rep) == rep)
            .collect();
        assert_eq!(stab.len() * orbit.len(), g.size());
        let name = catalogue
            .identify(&subgroup_abstract(g, &stab))
            .ok_or_else(|| {
                EngineError::Inconsistency(format!(
                    "unrecognized point stabilizer of order {}",
                    stab.len()
                ))
            })?;
        let ade = match name {
            "C2" => "A1",
            "C3" => "A2",
            "C4" => "A3",
            "C5" => "A4",
            "C6" => "A5",
            "Q8" => "D4",
            "BD12" => "D5",
            "BT24" => "E6",
            other => {
                return Err(EngineError::UnknownLocalModel(format!(
                    "no ADE type for point stabilizer {other}"
                )))
            }
        };
        *out.entry(ade).or_insert(0) += 1;
    }
    Ok(out)
}

/// Renders an ADE configuration as `E6+D4+4A2+A1`, sorted by rank
/// descending (and D before A at equal rank).
pub fn ade_string(config: &BTreeMap<&'static str, usize>) -> String {
    let rank = |label: &str| -> (usize, u8) {
        let r: usize = label[1..].parse().expect("ADE label");
        (r, if label.starts_with('A') { 0 } else { 1 })
    };
    let mut parts: Vec<(&'static str, usize)> =
        config.iter().map(|(&l, &c)| (l, c)).collect();
    parts.sort_by_key(|(l, _)| std::cmp::Reverse(rank(l)));
    parts
        .iter()
        .map(|(l, c)| {
            if *c == 1 {
                (*l).to_string()
            } else {
                format!("{c}{l}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}
