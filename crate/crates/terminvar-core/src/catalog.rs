//! The built-in catalog of torus quotient models and their tabulated
//! invariants.
//!
//! Each entry fixes a torus model, a dimension parameter `n`, and affine
//! generators in the level-`n+1` torsion frame.  The expected tables record
//! every invariant the engine must reproduce; they are the reference data
//! the `verify` workflow checks against.

use crate::group::action::{ActionGroup, GenSpec};
use crate::models::TorusModel;
use crate::{EngineError, Result};

/// One catalogued action.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Catalog id: `k<n>/<order>,<index>`, with an optional letter suffix
    /// distinguishing different actions realizing the same abstract group,
    /// and `NA` where the isomorphism type has no library index.
    pub id: &'static str,
    /// Structural alias of the group.
    pub alias: &'static str,
    /// Torus model hosting the linear parts.
    pub model: &'static str,
    /// Dimension parameter: the variety is the `n`-th generalized Kummer.
    pub n: u32,
    /// Generators of the affine action.
    pub gens: Vec<GenSpec>,
}

impl CatalogEntry {
    /// Torsion level of the frame the action is computed in.
    pub fn level(&self) -> i64 {
        self.n as i64 + 1
    }

    /// Group order declared by the id.
    pub fn declared_order(&self) -> usize {
        self.id
            .split('/')
            .nth(1)
            .and_then(|s| s.split(',').next())
            .and_then(|s| s.parse().ok())
            .expect("catalog ids are well-formed")
    }

    /// Builds the closed action group.
    pub fn build(&self) -> Result<ActionGroup> {
        let model = TorusModel::by_name(self.model)?;
        ActionGroup::new(&model, self.level(), &self.gens, crate::size_cap())
    }
}

/// All catalogued actions, in table order.
pub fn entries() -> Vec<CatalogEntry> {
    let t = GenSpec::translation_only;
    let lin = GenSpec::linear_only;
    let aff = GenSpec::affine;
    let e = |id: &'static str,
             alias: &'static str,
             model: &'static str,
             n: u32,
             gens: Vec<GenSpec>| CatalogEntry {
        id,
        alias,
        model,
        n,
        gens,
    };

    // Frequently used torsion translations, written in level-3 coordinates
    // for n = 2 and level-4 coordinates for n = 3.
    let e1 = [1, 0, 0, 0];
    let e2 = [0, 1, 0, 0];
    let e3 = [0, 0, 1, 0];
    let e4 = [0, 0, 0, 1];
    let u1 = [2, 1, 0, 0];
    let u2 = [0, 0, 2, 1];
    let k1 = [1, 1, 0, 0];
    let k2 = [0, 0, 1, 1];
    let q1 = [2, 2, 1, 0];
    let q2 = [0, 2, 1, 1];

    vec![
        // C2 frame: -id extended by growing translation subgroups.
        e("k2/2,1", "C2", "e2-i", 2, vec![lin("neg_id")]),
        e("k2/6,1", "C3:C2", "e2-i", 2, vec![lin("neg_id"), t(e1)]),
        e("k2/18,4", "C3^2:2C2", "e2-i", 2, vec![lin("neg_id"), t(e1), t(e2)]),
        e(
            "k2/54,14",
            "C3^3:C2",
            "e2-i",
            2,
            vec![lin("neg_id"), t(e1), t(e2), t(e3)],
        ),
        e(
            "k2/162,54",
            "C3^4:C2",
            "e2-i",
            2,
            vec![lin("neg_id"), t(e1), t(e2), t(e3), t(e4)],
        ),
        // C3 frame: the a-rows use a fixed-point-free affine representative,
        // the b-rows the linear one.
        e("k2/3,1a", "C3", "e2-zeta3", 2, vec![aff(e1, "g3")]),
        e("k2/3,1b", "C3", "e2-zeta3", 2, vec![lin("g3")]),
        e("k2/9,2a", "C3^2", "e2-zeta3", 2, vec![aff(e1, "g3"), t(u1)]),
        e("k2/9,2b", "C3^2", "e2-zeta3", 2, vec![lin("g3"), t(u1)]),
        e(
            "k2/27,3a",
            "C3^2:C3",
            "e2-zeta3",
            2,
            vec![aff(e1, "g3"), t(e3)],
        ),
        e("k2/27,3b", "C3^2:C3", "e2-zeta3", 2, vec![lin("g3"), t(e3)]),
        e(
            "k2/27,5a",
            "C3^3",
            "e2-zeta3",
            2,
            vec![aff(e1, "g3"), t(u1), t(u2)],
        ),
        e(
            "k2/27,5b",
            "C3^3",
            "e2-zeta3",
            2,
            vec![lin("g3"), t(u1), t(u2)],
        ),
        e(
            "k2/81,12a",
            "C3^3:2C3",
            "e2-zeta3",
            2,
            vec![aff(e1, "g3"), t(e3), t(u1)],
        ),
        e(
            "k2/81,12b",
            "C3^3:2C3",
            "e2-zeta3",
            2,
            vec![lin("g3"), t(e3), t(u1)],
        ),
        e(
            "k2/243,37",
            "C3^4:1C3",
            "e2-zeta3",
            2,
            vec![lin("g3"), t(e1), t(e2), t(e3), t(e4)],
        ),
        // C4 frame.
        e("k2/4,1", "C4", "e2-i", 2, vec![lin("g4")]),
        e("k2/36,9", "C3^2:C4", "e2-i", 2, vec![lin("g4"), t(e1), t(e2)]),
        e(
            "k2/324,164",
            "C3^4:4C4",
            "e2-i",
            2,
            vec![lin("g4"), t(e1), t(e2), t(e3), t(e4)],
        ),
        // C6 frame.
        e("k2/6,2", "C6", "e2-zeta6", 2, vec![lin("g6")]),
        e("k2/18,3", "C3:C6", "e2-zeta6", 2, vec![lin("g6"), t(k1)]),
        e(
            "k2/54,13",
            "C3^2:4C6",
            "e2-zeta6",
            2,
            vec![lin("g6"), t(k1), t(k2)],
        ),
        e("k2/54,5", "C3^2:C6", "e2-zeta6", 2, vec![lin("g6"), t(e1)]),
        e(
            "k2/162,40",
            "C3^3:4C6",
            "e2-zeta6",
            2,
            vec![lin("g6"), t(e1), t(k2)],
        ),
        e(
            "k2/486,146",
            "C3^4:4C6",
            "e2-zeta6",
            2,
            vec![lin("g6"), t(e1), t(e2), t(e3), t(e4)],
        ),
        // Q8 frame.
        e("k2/8,4", "Q8", "quaternionic", 2, vec![lin("li"), lin("lj")]),
        e(
            "k2/72,41",
            "C3^2:Q8",
            "quaternionic",
            2,
            vec![lin("li"), lin("lj"), t(q1), t(q2)],
        ),
        e(
            "k2/648,730",
            "C3^4:Q8",
            "quaternionic",
            2,
            vec![lin("li"), lin("lj"), t(e1), t(e2), t(e3), t(e4)],
        ),
        // BD12 frame.
        e("k2/12,1", "BD12", "e2-zeta6", 2, vec![lin("g6"), lin("h")]),
        e(
            "k2/108,37",
            "C3^2:3BD12",
            "e2-zeta6",
            2,
            vec![lin("g6"), lin("h"), t(k1)],
        ),
        e(
            "k2/972,NA",
            "C3^4:BD12",
            "e2-zeta6",
            2,
            vec![lin("g6"), lin("h"), t(e1), t(e2), t(e3), t(e4)],
        ),
        // BT24 frame.
        e("k2/24,3", "BT24", "quaternionic", 2, vec![lin("li"), lin("lw")]),
        e(
            "k2/216,153",
            "C3^2:BT24",
            "quaternionic",
            2,
            vec![lin("li"), lin("lw"), t(q1), t(q2)],
        ),
        e(
            "k2/1944,NA",
            "C3^4:BT24",
            "quaternionic",
            2,
            vec![lin("li"), lin("lw"), t(e1), t(e2), t(e3), t(e4)],
        ),
        // Dimension three: -id extended by 2-torsion translations, level 4.
        e("k3/2,1", "C2", "e2-i", 3, vec![lin("neg_id")]),
        e(
            "k3/4,2",
            "C2^2",
            "e2-i",
            3,
            vec![lin("neg_id"), t([2, 0, 0, 0])],
        ),
        e(
            "k3/8,5",
            "C2^3",
            "e2-i",
            3,
            vec![lin("neg_id"), t([2, 0, 0, 0]), t([0, 2, 0, 0])],
        ),
        e(
            "k3/16,14",
            "C2^4",
            "e2-i",
            3,
            vec![
                lin("neg_id"),
                t([2, 0, 0, 0]),
                t([0, 2, 0, 0]),
                t([0, 0, 2, 0]),
            ],
        ),
        e(
            "k3/32,51",
            "C2^5",
            "e2-i",
            3,
            vec![
                lin("neg_id"),
                t([2, 0, 0, 0]),
                t([0, 2, 0, 0]),
                t([0, 0, 2, 0]),
                t([0, 0, 0, 2]),
            ],
        ),
    ]
}

/// Looks up a catalog entry by id.
pub fn find(id: &str) -> Result<CatalogEntry> {
    entries()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| EngineError::BadSpec(format!("unknown catalog id `{id}`")))
}

/// Expected main-table row for a dimension-two model.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedMain {
    pub id: &'static str,
    pub alias: &'static str,
    pub rank: usize,
    pub n2: usize,
    pub n3: usize,
    pub b2: usize,
    pub pi1: &'static str,
}

/// The main dimension-two table.
pub const KUMMER_N2: &[ExpectedMain] = &[
    m("k2/2,1", "C2", 7, 1, 0, 8, "1"),
    m("k2/6,1", "C3:C2", 7, 1, 0, 8, "1"),
    m("k2/18,4", "C3^2:2C2", 7, 1, 0, 8, "1"),
    m("k2/54,14", "C3^3:C2", 7, 1, 0, 8, "1"),
    m("k2/162,54", "C3^4:C2", 7, 1, 0, 8, "1"),
    m("k2/3,1a", "C3", 5, 0, 0, 5, "C3"),
    m("k2/3,1b", "C3", 5, 0, 1, 7, "1"),
    m("k2/9,2a", "C3^2", 5, 0, 0, 5, "C3^2"),
    m("k2/9,2b", "C3^2", 5, 0, 3, 11, "1"),
    m("k2/27,3a", "C3^2:C3", 5, 0, 0, 5, "C3^2:C3"),
    m("k2/27,3b", "C3^2:C3", 5, 0, 1, 7, "C3"),
    m("k2/27,5a", "C3^3", 5, 0, 0, 5, "C3^3"),
    m("k2/27,5b", "C3^3", 5, 0, 9, 23, "1"),
    m("k2/81,12a", "C3^3:2C3", 5, 0, 0, 5, "C3^3:2C3"),
    m("k2/81,12b", "C3^3:2C3", 5, 0, 3, 11, "C3"),
    m("k2/243,37", "C3^4:1C3", 5, 0, 1, 7, "C3^2"),
    m("k2/4,1", "C4", 5, 1, 0, 6, "C2"),
    m("k2/36,9", "C3^2:C4", 5, 1, 0, 6, "C2"),
    m("k2/324,164", "C3^4:4C4", 5, 1, 0, 6, "C2"),
    m("k2/6,2", "C6", 5, 1, 1, 8, "1"),
    m("k2/18,3", "C3:C6", 5, 1, 2, 10, "1"),
    m("k2/54,13", "C3^2:4C6", 5, 1, 5, 16, "1"),
    m("k2/54,5", "C3^2:C6", 5, 1, 1, 8, "1"),
    m("k2/162,40", "C3^3:4C6", 5, 1, 2, 10, "1"),
    m("k2/486,146", "C3^4:4C6", 5, 1, 1, 8, "1"),
    m("k2/8,4", "Q8", 4, 1, 0, 5, "C2^2"),
    m("k2/72,41", "C3^2:Q8", 4, 1, 0, 5, "C2^2"),
    m("k2/648,730", "C3^4:Q8", 4, 1, 0, 5, "C2^2"),
    m("k2/12,1", "BD12", 4, 1, 1, 6, "C2"),
    m("k2/108,37", "C3^2:3BD12", 4, 1, 3, 10, "C2"),
    m("k2/972,NA", "C3^4:BD12", 4, 1, 1, 6, "C2"),
    m("k2/24,3", "BT24", 4, 1, 1, 7, "1"),
    m("k2/216,153", "C3^2:BT24", 4, 1, 1, 7, "1"),
    m("k2/1944,NA", "C3^4:BT24", 4, 1, 1, 7, "1"),
];

const fn m(
    id: &'static str,
    alias: &'static str,
    rank: usize,
    n2: usize,
    n3: usize,
    b2: usize,
    pi1: &'static str,
) -> ExpectedMain {
    ExpectedMain {
        id,
        alias,
        rank,
        n2,
        n3,
        b2,
        pi1,
    }
}

/// Expected singularity-and-topology row for a simply connected
/// dimension-two model.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedSing {
    pub id: &'static str,
    pub n2: usize,
    pub n3: usize,
    pub b2: usize,
    pub a2: u64,
    pub a3: u64,
    pub a4: u64,
    pub b4: i64,
    pub chi: i64,
    pub c4: &'static str,
    pub c2_squared: &'static str,
}

/// The dimension-two singularity table (exactly the simply connected rows).
pub const KUMMER_N2_SING: &[ExpectedSing] = &[
    s("k2/2,1", 1, 0, 8, 36, 0, 0, 90, 108, "90", "480"),
    s("k2/6,1", 1, 0, 8, 36, 13, 0, 64, 82, "166/3", "712/3"),
    s("k2/18,4", 1, 0, 8, 36, 16, 0, 58, 76, "142/3", "544/3"),
    s("k2/54,14", 1, 0, 8, 36, 13, 0, 64, 82, "166/3", "712/3"),
    s("k2/162,54", 1, 0, 8, 36, 0, 0, 90, 108, "90", "480"),
    s("k2/3,1b", 0, 1, 7, 0, 12, 0, 92, 108, "100", "540"),
    s("k2/9,2b", 0, 3, 11, 0, 15, 0, 126, 150, "140", "500"),
    s("k2/27,5b", 0, 9, 23, 0, 0, 0, 276, 324, "324", "828"),
    s("k2/6,2", 1, 1, 8, 28, 12, 0, 74, 92, "70", "320"),
    s("k2/18,3", 1, 2, 10, 28, 12, 0, 94, 116, "94", "328"),
    s("k2/54,13", 1, 5, 16, 28, 0, 0, 178, 212, "198", "576"),
    s("k2/54,5", 1, 1, 8, 28, 20, 0, 58, 76, "146/3", "512/3"),
    s("k2/162,40", 1, 2, 10, 28, 12, 0, 94, 116, "94", "328"),
    s("k2/486,146", 1, 1, 8, 28, 12, 0, 74, 92, "70", "320"),
    s("k2/24,3", 1, 1, 7, 20, 12, 3, 63, 79, "235/4", "275"),
    s("k2/216,153", 1, 1, 7, 20, 16, 3, 55, 71, "577/12", "601/3"),
    s("k2/1944,NA", 1, 1, 7, 20, 12, 3, 63, 79, "235/4", "275"),
];

#[allow(clippy::too_many_arguments)]
const fn s(
    id: &'static str,
    n2: usize,
    n3: usize,
    b2: usize,
    a2: u64,
    a3: u64,
    a4: u64,
    b4: i64,
    chi: i64,
    c4: &'static str,
    c2_squared: &'static str,
) -> ExpectedSing {
    ExpectedSing {
        id,
        n2,
        n3,
        b2,
        a2,
        a3,
        a4,
        b4,
        chi,
        c4,
        c2_squared,
    }
}

/// Expected row of the dimension-three table.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedSing3 {
    pub id: &'static str,
    pub alias: &'static str,
    pub n2: usize,
    pub b2: usize,
    pub a2: u64,
    pub s2: u64,
}

/// The dimension-three table.
pub const KUMMER_N3_SING: &[ExpectedSing3] = &[
    ExpectedSing3 {
        id: "k3/2,1",
        alias: "C2",
        n2: 1,
        b2: 8,
        a2: 140,
        s2: 0,
    },
    ExpectedSing3 {
        id: "k3/4,2",
        alias: "C2^2",
        n2: 2,
        b2: 9,
        a2: 112,
        s2: 7,
    },
    ExpectedSing3 {
        id: "k3/8,5",
        alias: "C2^3",
        n2: 4,
        b2: 11,
        a2: 64,
        s2: 18,
    },
    ExpectedSing3 {
        id: "k3/16,14",
        alias: "C2^4",
        n2: 8,
        b2: 15,
        a2: 0,
        s2: 28,
    },
    ExpectedSing3 {
        id: "k3/32,51",
        alias: "C2^5",
        n2: 16,
        b2: 23,
        a2: 0,
        s2: 0,
    },
];

/// Expected fixed-locus structure for the five cyclic-or-binary frame
/// actions: the number of pointwise fixed surfaces, the isolated fixed
/// sites, their split by incidence with single-element fixed surfaces
/// (`(#involution surfaces, #order-3 surfaces, count)` triples), and the ADE
/// configuration of the underlying surface quotient.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedFixedLoci {
    pub id: &'static str,
    pub surfaces: usize,
    pub points: usize,
    pub splits: &'static [(usize, usize, usize)],
    pub ade: &'static str,
}

/// The fixed-locus table.
pub const FIXED_LOCI: &[ExpectedFixedLoci] = &[
    ExpectedFixedLoci {
        id: "k2/2,1",
        surfaces: 1,
        points: 36,
        splits: &[(0, 0, 36)],
        ade: "16A1",
    },
    ExpectedFixedLoci {
        id: "k2/3,1b",
        surfaces: 1,
        points: 12,
        splits: &[(0, 0, 12)],
        ade: "9A2",
    },
    ExpectedFixedLoci {
        id: "k2/4,1",
        surfaces: 0,
        points: 16,
        splits: &[(0, 0, 8), (1, 0, 8)],
        ade: "4A3+6A1",
    },
    ExpectedFixedLoci {
        id: "k2/6,2",
        surfaces: 0,
        points: 12,
        splits: &[(0, 1, 6), (1, 0, 4), (1, 1, 2)],
        ade: "A5+4A2+5A1",
    },
    ExpectedFixedLoci {
        id: "k2/24,3",
        surfaces: 0,
        points: 2,
        splits: &[(0, 4, 2)],
        ade: "E6+D4+4A2+A1",
    },
];

/// Expected main row by id.
pub fn expected_main(id: &str) -> Option<&'static ExpectedMain> {
    KUMMER_N2.iter().find(|r| r.id == id)
}

/// Expected singularity row by id.
pub fn expected_sing(id: &str) -> Option<&'static ExpectedSing> {
    KUMMER_N2_SING.iter().find(|r| r.id == id)
}

/// Expected dimension-three row by id.
pub fn expected_sing3(id: &str) -> Option<&'static ExpectedSing3> {
    KUMMER_N3_SING.iter().find(|r| r.id == id)
}
