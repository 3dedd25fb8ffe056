//! Table assembly, deterministic rendering, and the verification harness.
//!
//! A [`Table`] is a named grid of pre-stringified cells.  `build_table`
//! computes one from the engine, `expected_table` assembles the reference
//! data, and `verify_table` diffs the two cell by cell.  All renderings are
//! byte-deterministic for a fixed table: row order follows the catalog,
//! rationals are canonical `p` or `p/q` strings, and set-valued cells are
//! sorted before printing.

use serde_json::json;

use crate::catalog;
use crate::group::action::ActionGroup;
use crate::hilb2;
use crate::invariants;
use crate::singularities::{self, ade_string};
use crate::topology::{self, rat_string};
use crate::{EngineError, Result};

/// Output format of a rendered table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// A named grid of cells, already canonically stringified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub name: &'static str,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Md => self.to_md(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&csv_line(self.header.iter().map(|s| s.to_string())));
        for row in &self.rows {
            out.push_str(&csv_line(row.iter().cloned()));
        }
        out
    }

    pub fn to_md(&self) -> String {
        let mut out = String::new();
        out.push_str(&md_line(self.header.iter().copied()));
        out.push_str(&md_line(self.header.iter().map(|_| "---")));
        for row in &self.rows {
            out.push_str(&md_line(row.iter().map(|s| s.as_str())));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let value = json!({
            "name": self.name,
            "header": self.header,
            "rows": self.rows,
        });
        let mut s = serde_json::to_string_pretty(&value).expect("tables serialize");
        s.push('\n');
        s
    }
}

fn csv_line<I: Iterator<Item = String>>(cells: I) -> String {
    let quoted: Vec<String> = cells
        .map(|c| {
            if c.contains(',') || c.contains('"') || c.contains('\n') {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c
            }
        })
        .collect();
    format!("{}\n", quoted.join(","))
}

fn md_line<'a, I: Iterator<Item = &'a str>>(cells: I) -> String {
    let cells: Vec<&str> = cells.collect();
    format!("| {} |\n", cells.join(" | "))
}

/// The five table names, in presentation order.
pub const TABLE_NAMES: [&str; 5] = [
    "kummer-n2",
    "kummer-n2-sing",
    "kummer-n3-sing",
    "hilb2",
    "fixed-loci",
];

/// Computes a named table from the engine.
pub fn build_table(name: &str) -> Result<Table> {
    match name {
        "kummer-n2" => build_kummer_n2(),
        "kummer-n2-sing" => build_kummer_n2_sing(),
        "kummer-n3-sing" => build_kummer_n3_sing(),
        "hilb2" => build_hilb2(),
        "fixed-loci" => build_fixed_loci(),
        _ => Err(EngineError::BadSpec(format!("unknown table `{name}`"))),
    }
}

/// Assembles a named table from the embedded reference data.
pub fn expected_table(name: &str) -> Result<Table> {
    match name {
        "kummer-n2" => Ok(Table {
            name: "kummer-n2",
            header: MAIN_HEADER.to_vec(),
            rows: catalog::KUMMER_N2
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.alias.to_string(),
                        r.rank.to_string(),
                        r.n2.to_string(),
                        r.n3.to_string(),
                        r.b2.to_string(),
                        r.pi1.to_string(),
                    ]
                })
                .collect(),
        }),
        "kummer-n2-sing" => Ok(Table {
            name: "kummer-n2-sing",
            header: SING_HEADER.to_vec(),
            rows: catalog::KUMMER_N2_SING
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.n2.to_string(),
                        r.n3.to_string(),
                        r.b2.to_string(),
                        r.a2.to_string(),
                        r.a3.to_string(),
                        r.a4.to_string(),
                        r.b4.to_string(),
                        r.chi.to_string(),
                        r.c4.to_string(),
                        r.c2_squared.to_string(),
                    ]
                })
                .collect(),
        }),
        "kummer-n3-sing" => Ok(Table {
            name: "kummer-n3-sing",
            header: SING3_HEADER.to_vec(),
            rows: catalog::KUMMER_N3_SING
                .iter()
                .map(|r| {
                    vec![
                        r.id.to_string(),
                        r.alias.to_string(),
                        r.n2.to_string(),
                        r.b2.to_string(),
                        r.a2.to_string(),
                        r.s2.to_string(),
                    ]
                })
                .collect(),
        }),
        "hilb2" => Ok(Table {
            name: "hilb2",
            header: HILB_HEADER.to_vec(),
            rows: hilb2::builtin_fixture()
                .iter()
                .map(|r| {
                    vec![
                        r.id.clone(),
                        r.alias.clone(),
                        r.rank.to_string(),
                        r.n2.to_string(),
                        r.b2.to_string(),
                        r.pi1.clone(),
                    ]
                })
                .collect(),
        }),
        "fixed-loci" => catalog::FIXED_LOCI
            .iter()
            .map(|r| {
                let entry = catalog::find(r.id)?;
                Ok(vec![
                    r.id.to_string(),
                    entry.alias.to_string(),
                    r.surfaces.to_string(),
                    r.points.to_string(),
                    split_string(r.splits.iter().copied()),
                    r.ade.to_string(),
                ])
            })
            .collect::<Result<Vec<_>>>()
            .map(|rows| Table {
                name: "fixed-loci",
                header: LOCI_HEADER.to_vec(),
                rows,
            }),
        _ => Err(EngineError::BadSpec(format!("unknown table `{name}`"))),
    }
}

const MAIN_HEADER: [&str; 7] = ["id", "alias", "rank", "N2", "N3", "b2", "pi1"];
const SING_HEADER: [&str; 11] = [
    "id", "N2", "N3", "b2", "a2", "a3", "a4", "b4", "chi", "c4", "c2^2",
];
const SING3_HEADER: [&str; 6] = ["id", "alias", "N2", "b2", "a2", "s2"];
const HILB_HEADER: [&str; 6] = ["id", "alias", "rank", "N2", "b2", "pi1"];
const LOCI_HEADER: [&str; 6] = ["id", "group", "surfaces", "points", "split", "ade"];

fn build_kummer_n2() -> Result<Table> {
    let mut rows = Vec::new();
    for entry in entries_of_dim(2) {
        let g = entry.build()?;
        let inv = invariants::compute(&g, 2)?;
        rows.push(vec![
            entry.id.to_string(),
            entry.alias.to_string(),
            inv.rank.to_string(),
            inv.n2.to_string(),
            inv.n3.to_string(),
            inv.b2.to_string(),
            inv.pi1.clone(),
        ]);
    }
    Ok(Table {
        name: "kummer-n2",
        header: MAIN_HEADER.to_vec(),
        rows,
    })
}

fn build_kummer_n2_sing() -> Result<Table> {
    let mut rows = Vec::new();
    for entry in entries_of_dim(2) {
        let g = entry.build()?;
        let inv = invariants::compute(&g, 2)?;
        if inv.pi1_order != 1 {
            continue;
        }
        let census = singularities::census_n2(&g)?;
        let (a2, a3, a4) = census.totals()?;
        let top = topology::topology(inv.b2 as i64, inv.b3 as i64, a2, a3, a4);
        rows.push(vec![
            entry.id.to_string(),
            inv.n2.to_string(),
            inv.n3.to_string(),
            inv.b2.to_string(),
            a2.to_string(),
            a3.to_string(),
            a4.to_string(),
            top.b4.to_string(),
            top.chi.to_string(),
            rat_string(&top.c4),
            rat_string(&top.c2_squared),
        ]);
    }
    Ok(Table {
        name: "kummer-n2-sing",
        header: SING_HEADER.to_vec(),
        rows,
    })
}

fn build_kummer_n3_sing() -> Result<Table> {
    let mut rows = Vec::new();
    for entry in entries_of_dim(3) {
        let g = entry.build()?;
        let inv = invariants::compute(&g, 3)?;
        let census = singularities::census_n3(&g)?;
        rows.push(vec![
            entry.id.to_string(),
            entry.alias.to_string(),
            inv.n2.to_string(),
            inv.b2.to_string(),
            census.a2.to_string(),
            census.s2.to_string(),
        ]);
    }
    Ok(Table {
        name: "kummer-n3-sing",
        header: SING3_HEADER.to_vec(),
        rows,
    })
}

fn build_hilb2() -> Result<Table> {
    let mut rows = Vec::new();
    for fixture in hilb2::builtin_fixture() {
        let g = fixture.group()?;
        let inv = hilb2::compute(&g, fixture.rank)?;
        rows.push(vec![
            fixture.id.clone(),
            fixture.alias.clone(),
            fixture.rank.to_string(),
            inv.n2.to_string(),
            inv.b2.to_string(),
            inv.pi1.clone(),
        ]);
    }
    Ok(Table {
        name: "hilb2",
        header: HILB_HEADER.to_vec(),
        rows,
    })
}

fn build_fixed_loci() -> Result<Table> {
    let mut rows = Vec::new();
    for expected in catalog::FIXED_LOCI {
        let entry = catalog::find(expected.id)?;
        let g = entry.build()?;
        let census = singularities::census_n2(&g)?;
        let fixed = census.group_fixed();
        // A surface is pointwise fixed by the whole group exactly when the
        // group is generated by the single qualifying element carrying it.
        let surfaces = match (g.order(), census.n2, census.n3) {
            (2, 1, _) => 1,
            (3, _, 1) => 1,
            _ => 0,
        };
        let mut split: std::collections::BTreeMap<(usize, usize), usize> =
            std::collections::BTreeMap::new();
        for (_, a1, a2) in &fixed {
            *split.entry((*a1, *a2)).or_default() += 1;
        }
        let ade = ade_string(&singularities::surface_quotient_ade(&g)?);
        rows.push(vec![
            entry.id.to_string(),
            entry.alias.to_string(),
            surfaces.to_string(),
            fixed.len().to_string(),
            split_string(split.into_iter().map(|((a1, a2), c)| (a1, a2, c))),
            ade,
        ]);
    }
    Ok(Table {
        name: "fixed-loci",
        header: LOCI_HEADER.to_vec(),
        rows,
    })
}

fn entries_of_dim(n: u32) -> Vec<catalog::CatalogEntry> {
    catalog::entries().into_iter().filter(|e| e.n == n).collect()
}

/// Renders an incidence split such as `-:8 A1:8` from `(A1, A2, count)`
/// triples, in ascending incidence order.
fn split_string<I: Iterator<Item = (usize, usize, usize)>>(parts: I) -> String {
    let rendered: Vec<String> = parts
        .map(|(a1, a2, count)| {
            let mut label = Vec::new();
            if a1 == 1 {
                label.push("A1".to_string());
            } else if a1 > 1 {
                label.push(format!("{a1}A1"));
            }
            if a2 == 1 {
                label.push("A2".to_string());
            } else if a2 > 1 {
                label.push(format!("{a2}A2"));
            }
            let label = if label.is_empty() {
                "-".to_string()
            } else {
                label.join("+")
            };
            format!("{label}:{count}")
        })
        .collect();
    rendered.join(" ")
}

/// One cell-level disagreement between a computed and an expected table.
#[derive(Clone, Debug)]
pub struct CellDiff {
    pub table: &'static str,
    pub row: String,
    pub column: &'static str,
    pub expected: String,
    pub got: String,
}

impl std::fmt::Display for CellDiff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} row {} column {}: expected {}, got {}",
            self.table, self.row, self.column, self.expected, self.got
        )
    }
}

/// Recomputes a named table and diffs it against the embedded reference
/// data.  An empty result means every cell matches.
pub fn verify_table(name: &str) -> Result<Vec<CellDiff>> {
    let expected = expected_table(name)?;
    let got = build_table(name)?;
    assert_eq!(expected.header, got.header);
    let mut diffs = Vec::new();
    let got_rows: std::collections::BTreeMap<&str, &Vec<String>> =
        got.rows.iter().map(|r| (r[0].as_str(), r)).collect();
    for want in &expected.rows {
        let id = want[0].as_str();
        let Some(have) = got_rows.get(id) else {
            diffs.push(CellDiff {
                table: expected.name,
                row: id.to_string(),
                column: "id",
                expected: "present".to_string(),
                got: "missing".to_string(),
            });
            continue;
        };
        for (i, column) in expected.header.iter().enumerate() {
            if want[i] != have[i] {
                diffs.push(CellDiff {
                    table: expected.name,
                    row: id.to_string(),
                    column,
                    expected: want[i].clone(),
                    got: have[i].clone(),
                });
            }
        }
    }
    let expected_ids: std::collections::BTreeSet<&str> =
        expected.rows.iter().map(|r| r[0].as_str()).collect();
    for row in &got.rows {
        if !expected_ids.contains(row[0].as_str()) {
            diffs.push(CellDiff {
                table: expected.name,
                row: row[0].clone(),
                column: "id",
                expected: "absent".to_string(),
                got: "present".to_string(),
            });
        }
    }
    Ok(diffs)
}

/// The singular-configuration report of one quotient, as a JSON value:
/// the qualifying surfaces, every isolated orbit with its isotropy and
/// local model, and the census totals.
///
/// Incidence is recorded as a type multiset (`A1`/`A2` sheet counts), the
/// level of detail the local-model classification keys on.
pub fn singular_configuration(g: &ActionGroup) -> Result<serde_json::Value> {
    if g.level() == 4 {
        let inv = invariants::compute(g, 3)?;
        let census = singularities::census_n3(g)?;
        return Ok(json!({
            "n": 3,
            "group_order": g.order(),
            "N2": inv.n2,
            "census": {
                "a2": census.a2,
                "s2": census.s2,
                "smooth": census.smooth(),
            },
        }));
    }
    let qual = invariants::qualifying(g, 2)?;
    let mut surfaces = Vec::new();
    for (i, class) in qual.involution_classes.iter().enumerate() {
        surfaces.push(json!({
            "id": format!("A1-{}", i + 1),
            "type": "A1",
            "class_size": class.len(),
        }));
    }
    for (i, class) in qual.subgroup3_classes.iter().enumerate() {
        surfaces.push(json!({
            "id": format!("A2-{}", i + 1),
            "type": "A2",
            "class_size": class.len(),
        }));
    }
    let census = singularities::census_n2(g)?;
    let points: Vec<serde_json::Value> = census
        .orbits
        .iter()
        .map(|orbit| {
            json!({
                "site": site_kind(&orbit.rep),
                "orbit_size": orbit.orbit_size,
                "isotropy": orbit.stabilizer,
                "on_surfaces": orbit.incident,
                "local_model": orbit.key(),
                "residual": orbit.contribution.map(|(a2, a3, a4)| vec![a2, a3, a4]),
            })
        })
        .collect();
    let (a2, a3, a4) = census.totals()?;
    Ok(json!({
        "n": 2,
        "group_order": g.order(),
        "surfaces": surfaces,
        "points": points,
        "census": {
            "a2": a2,
            "a3": a3,
            "a4": a4,
            "smooth": census.smooth()?,
        },
    }))
}

fn site_kind(site: &crate::fixed_loci::Site) -> &'static str {
    use crate::fixed_loci::Site;
    match site {
        Site::Triple(_) => "triple",
        Site::CurveFiber(_, _) => "curve-fiber",
        Site::Punctual(_) => "punctual",
        Site::Pv(_, _) => "line-pair",
    }
}

/// Canonical one-line summary of an invariant record, the deduplication key
/// of the subgroup enumeration.
pub fn invariant_string(inv: &invariants::KummerInvariants) -> String {
    format!(
        "order={} g0={} rank={} N2={} N3={} eps={} b2={} b3={} pi1={} gate={}",
        inv.group_order,
        inv.g0,
        inv.rank,
        inv.n2,
        inv.n3,
        inv.epsilon,
        inv.b2,
        inv.b3,
        inv.pi1,
        inv.gate.as_str(),
    )
}
