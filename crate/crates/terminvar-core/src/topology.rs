//! Topological invariants of the terminalization from `b_2`, `b_3` and the
//! residual singular-point counts.
//!
//! The fourfold identities combine the quotient's stringy data with the
//! residual cyclic points: `b_4` and the topological Euler characteristic
//! are integers, while the Chern numbers `c_4` and `c_2^2` acquire exact
//! rational corrections from the residual points of local order 2, 3, 4.

use num_traits::One;

use crate::{rat, Rat};

/// The derived topological profile of a terminalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    pub b2: i64,
    pub b3: i64,
    pub b4: i64,
    /// Topological Euler characteristic.
    pub chi: i64,
    /// Chern number `c_4` (integral over the fourfold, exact rational).
    pub c4: Rat,
    /// Chern number `c_2^2`, exact rational.
    pub c2_squared: Rat,
}

/// Computes the profile from the second and third Betti numbers and the
/// residual point counts `(a2, a3, a4)`.
pub fn topology(b2: i64, b3: i64, a2: u64, a3: u64, a4: u64) -> Topology {
    let (a2, a3, a4) = (a2 as i64, a3 as i64, a4 as i64);
    let defect = a2 + 2 * a3 + 3 * a4;
    let b4 = 10 * b2 - b3 + 46 - defect;
    let chi = 12 * b2 - 3 * b3 + 48 - defect;
    // Poincare duality ties the rows together; this identity is structural.
    assert_eq!(chi, 2 + 2 * b2 - 2 * b3 + b4, "Betti/Euler identity");
    let c4 = rat(chi, 1) - rat(a2, 2) - rat(2 * a3, 3) - rat(3 * a4, 4);
    let correction = rat(a2, 32) + rat(2 * a3, 27) + rat(9 * a4, 64);
    let c2_squared = &c4 / rat(3, 1) + rat(720, 1) - rat(240, 1) * correction;
    Topology {
        b2,
        b3,
        b4,
        chi,
        c4,
        c2_squared,
    }
}

/// Renders an exact rational as `p` or `p/q` for reports.
pub fn rat_string(x: &Rat) -> String {
    if x.denom().is_one() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
