//! Invariants of terminalized quotients of Hilbert squares of K3 surfaces.
//!
//! Here the group acts without translations, so the combinatorics is pure
//! group theory: every involution contributes an irreducible exceptional
//! divisor, `N2` is the number of conjugacy classes of involutions,
//! `b2 = rank + N2` where `rank` is the rank of the invariant sublattice of
//! the second cohomology of the surface (part of the fixture data, since it
//! depends on the lattice representation and not just on the abstract
//! group), and the fundamental group of the regular locus is the quotient
//! by the normal closure of all involutions.

use crate::group::catalogue::Catalogue;
use crate::group::perm::PermGroup;
use crate::group::{normal_closure, quotient};
use crate::{EngineError, Result};

/// One fixture row: a permutation model of a tabulated group together with
/// its expected invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hilb2Row {
    /// `order,index` label of the isomorphism type.
    pub id: String,
    /// Short structural alias.
    pub alias: String,
    /// Rank of the invariant sublattice of the surface's second cohomology.
    pub rank: i64,
    /// Number of points the permutation model acts on.
    pub degree: usize,
    /// Cycle words, one generator per entry.
    pub generators: Vec<String>,
    /// Expected number of involution conjugacy classes.
    pub n2: usize,
    /// Expected second Betti number of the terminalization.
    pub b2: i64,
    /// Expected fundamental group of the regular locus (catalogue name).
    pub pi1: String,
}

impl Hilb2Row {
    /// Builds the permutation group of this row.
    pub fn group(&self) -> Result<PermGroup> {
        let gens: Vec<&str> = self.generators.iter().map(|s| s.as_str()).collect();
        let g = PermGroup::from_cycles(&gens)?;
        if g.degree() != self.degree {
            return Err(EngineError::BadSpec(format!(
                "row {}: declared degree {} but generators reach {}",
                self.id,
                self.degree,
                g.degree()
            )));
        }
        Ok(g)
    }

    /// The declared group order (first component of the id).
    pub fn order(&self) -> usize {
        self.id
            .split(',')
            .next()
            .and_then(|s| s.parse().ok())
            .expect("validated at parse time")
    }
}

/// Computed invariants for one quotient of a Hilbert square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hilb2Invariants {
    /// Order of the acting group.
    pub order: usize,
    /// Conjugacy classes of involutions.
    pub n2: usize,
    /// Second Betti number of the terminalization.
    pub b2: i64,
    /// Catalogue name of the fundamental group of the regular locus.
    pub pi1: String,
    /// Its order.
    pub pi1_order: usize,
}

/// Computes the invariants of the terminalized quotient for a symplectic
/// action with invariant sublattice rank `rank`.
pub fn compute(g: &PermGroup, rank: i64) -> Result<Hilb2Invariants> {
    if g.order() % 2 != 0 {
        return Err(EngineError::BadSpec(format!(
            "group of odd order {} has no involutions; the quotient needs no \
             divisorial resolution and is not modeled here",
            g.order()
        )));
    }
    let involutions = g.involutions();
    let n2 = g.involution_class_count();
    let ncl = normal_closure(g, &involutions);
    let pi1_group = quotient(g, &ncl);
    let cat = Catalogue::new();
    let pi1 = cat.identify(&pi1_group).ok_or_else(|| {
        EngineError::Inconsistency(format!(
            "fundamental group of order {} is not catalogued",
            pi1_group.order()
        ))
    })?;
    Ok(Hilb2Invariants {
        order: g.order(),
        n2,
        b2: rank + n2 as i64,
        pi1: pi1.to_string(),
        pi1_order: pi1_group.order(),
    })
}

/// Computes the invariants for a fixture row and checks every expected
/// column, returning the computed values on success.
pub fn verify_row(row: &Hilb2Row) -> Result<Hilb2Invariants> {
    let g = row.group()?;
    let inv = compute(&g, row.rank)?;
    if g.order() != row.order() {
        return Err(EngineError::Inconsistency(format!(
            "row {}: generators close to order {}, expected {}",
            row.id,
            g.order(),
            row.order()
        )));
    }
    if inv.n2 != row.n2 || inv.b2 != row.b2 || inv.pi1 != row.pi1 {
        return Err(EngineError::Inconsistency(format!(
            "row {}: expected (N2, b2, pi1) = ({}, {}, {}), computed ({}, {}, {})",
            row.id, row.n2, row.b2, row.pi1, inv.n2, inv.b2, inv.pi1
        )));
    }
    Ok(inv)
}

/// Parses the semicolon-delimited fixture format:
/// `id;alias;rank;degree;generators;n2;b2;pi1` with generators separated by
/// spaces.
pub fn parse_fixture(text: &str) -> Result<Vec<Hilb2Row>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: String| {
            EngineError::BadSpec(format!("fixture line {}: {}", lineno + 1, msg))
        };
        let fields: Vec<&str> = line.split(';').collect();
        if fields.len() != 8 {
            return Err(bad(format!("expected 8 fields, found {}", fields.len())));
        }
        let id = fields[0].to_string();
        let order: usize = id
            .split(',')
            .next()
            .unwrap_or("")
            .parse()
            .map_err(|_| bad(format!("id `{id}` must start with the group order")))?;
        if order == 0 {
            return Err(bad(format!("id `{id}` declares order zero")));
        }
        let rank: i64 = fields[2]
            .parse()
            .map_err(|_| bad(format!("bad rank `{}`", fields[2])))?;
        let degree: usize = fields[3]
            .parse()
            .map_err(|_| bad(format!("bad degree `{}`", fields[3])))?;
        let generators: Vec<String> = fields[4]
            .split_whitespace()
            .map(|s| s.to_string())
            .collect();
        if generators.is_empty() {
            return Err(bad("no generators".to_string()));
        }
        let n2: usize = fields[5]
            .parse()
            .map_err(|_| bad(format!("bad N2 `{}`", fields[5])))?;
        let b2: i64 = fields[6]
            .parse()
            .map_err(|_| bad(format!("bad b2 `{}`", fields[6])))?;
        rows.push(Hilb2Row {
            id,
            alias: fields[1].to_string(),
            rank,
            degree,
            generators,
            n2,
            b2,
            pi1: fields[7].to_string(),
        });
    }
    Ok(rows)
}

/// The built-in table of tabulated groups with permutation models.
pub fn builtin_fixture() -> Vec<Hilb2Row> {
    parse_fixture(include_str!("../../../data/hilb2_k3.csv")).expect("built-in fixture is valid")
}
