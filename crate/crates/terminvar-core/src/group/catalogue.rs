//! A catalogue of named small groups used to label fundamental groups and
//! point stabilizers.
//!
//! Every name that the pipelines can emit is backed by an explicit witness
//! group; identification is exact (fingerprint filter, then isomorphism
//! search), never a guess from numerical invariants alone.

use super::abstract_group::{AbstractGroup, Fingerprint};
use super::perm::{Perm, PermGroup};
use super::GroupOps;

/// A named witness group.
struct Witness {
    name: &'static str,
    group: AbstractGroup,
    fingerprint: Fingerprint,
}

/// The catalogue of all namable groups.
pub struct Catalogue {
    witnesses: Vec<Witness>,
}

impl Default for Catalogue {
    fn default() -> Self {
        Self::new()
    }
}

impl Catalogue {
    /// Builds all witnesses.
    pub fn new() -> Catalogue {
        let mut witnesses = Vec::new();
        let mut add = |name: &'static str, g: PermGroup| {
            let group = g.to_abstract();
            let fingerprint = group.fingerprint();
            witnesses.push(Witness {
                name,
                group,
                fingerprint,
            });
        };
        add("1", PermGroup::trivial());
        add("C2", cyclic_witness(2));
        add("C3", cyclic_witness(3));
        add("C4", cyclic_witness(4));
        add("C5", cyclic_witness(5));
        add("C6", cyclic_witness(6));
        add("C2^2", PermGroup::from_cycles(&["(1,2)", "(3,4)"]).unwrap());
        add(
            "C3^2",
            PermGroup::from_cycles(&["(1,2,3)", "(4,5,6)"]).unwrap(),
        );
        add(
            "C3^3",
            PermGroup::from_cycles(&["(1,2,3)", "(4,5,6)", "(7,8,9)"]).unwrap(),
        );
        add("S3", PermGroup::from_cycles(&["(1,2,3)", "(1,2)"]).unwrap());
        add("D4", PermGroup::from_cycles(&["(1,2,3,4)", "(1,3)"]).unwrap());
        add("A4", PermGroup::from_cycles(&["(1,2,3)", "(2,3,4)"]).unwrap());
        add(
            "Q8",
            PermGroup::from_cycles(&["(1,2,5,6)(3,4,7,8)", "(1,3,5,7)(2,8,6,4)"]).unwrap(),
        );
        add("BD12", dicyclic(3));
        add("BT24", binary_tetrahedral());
        add(
            "C3xS3",
            PermGroup::from_cycles(&["(1,2,3)", "(1,2)", "(4,5,6)"]).unwrap(),
        );
        add("C3^2:C3", heisenberg3(0));
        add("C3^3:2C3", heisenberg3_times_c3());
        Catalogue { witnesses }
    }

    /// Returns the catalogue name of the given group, if it is one of the
    /// namable ones.
    pub fn identify(&self, g: &AbstractGroup) -> Option<&'static str> {
        let fp = g.fingerprint();
        for w in &self.witnesses {
            if w.fingerprint == fp && g.is_isomorphic(&w.group) {
                return Some(w.name);
            }
        }
        None
    }

    /// Looks up a witness group by name (for tests and cross-checks).
    pub fn witness(&self, name: &str) -> Option<&AbstractGroup> {
        self.witnesses
            .iter()
            .find(|w| w.name == name)
            .map(|w| &w.group)
    }
}

fn cyclic_witness(n: usize) -> PermGroup {
    let pts: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
    let word = format!("({})", pts.join(","));
    PermGroup::from_cycles(&[&word]).unwrap()
}

/// The dicyclic group of order `4n` acting on its own 4n elements
/// `{a^i, a^i b}`: `a` is a pair of 2n-cycles, and `b` maps `a^i` to
/// `a^{-i} b` and `a^i b` to `a^{n-i}` (using `b^2 = a^n`).
pub fn dicyclic(n: usize) -> PermGroup {
    let m = 2 * n;
    let degree = 4 * n;
    let mut a: Perm = (0..degree as u8).collect();
    for i in 0..m {
        a[i] = ((i + 1) % m) as u8;
        a[m + i] = (m + (i + 1) % m) as u8;
    }
    let mut b: Perm = (0..degree as u8).collect();
    for i in 0..m {
        b[i] = (m + (m - i) % m) as u8;
        b[m + i] = ((n + m - i) % m) as u8;
    }
    PermGroup::from_perms(degree, vec![a, b]).unwrap()
}

/// `SL(2, F_3)`, the binary tetrahedral group, acting on the eight nonzero
/// vectors of `F_3^2`.
fn binary_tetrahedral() -> PermGroup {
    // The images of the quaternion unit i and the order-6 unit (1+i+j+k)/2
    // under an isomorphism with the Hurwitz units.
    let gen_i = [[0, 2], [1, 0]];
    let gen_w = [[2, 2], [0, 2]];
    matrix_action_f3(&[gen_i, gen_w])
}

/// The group generated by 2x2 matrices over `F_3` acting on the 8 nonzero
/// vectors, indexed `3x + y` skipping the origin.
fn matrix_action_f3(mats: &[[[u8; 2]; 2]]) -> PermGroup {
    let vecs: Vec<(u8, u8)> = (0..3)
        .flat_map(|x| (0..3).map(move |y| (x, y)))
        .filter(|&(x, y)| (x, y) != (0, 0))
        .collect();
    let idx = |x: u8, y: u8| vecs.iter().position(|&v| v == (x, y)).unwrap() as u8;
    let gens: Vec<Perm> = mats
        .iter()
        .map(|m| {
            vecs.iter()
                .map(|&(x, y)| {
                    let nx = (m[0][0] * x + m[0][1] * y) % 3;
                    let ny = (m[1][0] * x + m[1][1] * y) % 3;
                    idx(nx, ny)
                })
                .collect()
        })
        .collect();
    PermGroup::from_perms(8, gens).unwrap()
}

/// The Heisenberg group over `F_3` (extraspecial of order 27, exponent 3)
/// acting on the 9 points of `F_3^2` by `(x,y) -> (x+1,y)` and
/// `(x,y) -> (x, x+y)`.  `offset` shifts the point labels, so the same
/// construction can be embedded into a larger degree.
fn heisenberg3(offset: u8) -> PermGroup {
    let degree = offset as usize + 9;
    let pt = |x: u8, y: u8| offset + 3 * (x % 3) + (y % 3);
    let mut a: Perm = (0..degree as u8).collect();
    let mut b: Perm = (0..degree as u8).collect();
    for x in 0..3 {
        for y in 0..3 {
            a[pt(x, y) as usize] = pt(x + 1, y);
            b[pt(x, y) as usize] = pt(x, x + y);
        }
    }
    PermGroup::from_perms(degree, vec![a, b]).unwrap()
}

/// The direct product of the order-27 Heisenberg group with `C3`, of order
/// 81.
fn heisenberg3_times_c3() -> PermGroup {
    let he3 = heisenberg3(0);
    let mut gens: Vec<Perm> = he3
        .generators()
        .iter()
        .map(|&g| {
            let mut p: Perm = (0..12).collect();
            p[..9].copy_from_slice(he3.perm(g));
            p
        })
        .collect();
    let mut c3: Perm = (0..12).collect();
    c3[9] = 10;
    c3[10] = 11;
    c3[11] = 9;
    gens.push(c3);
    PermGroup::from_perms(12, gens).unwrap()
}
