//! Torsion points of a four-dimensional real torus `R^4 / Z^4`.
//!
//! Points are stored with exact rational coordinates reduced to `[0, 1)`,
//! which makes equality, ordering and hashing structural; the reduced form
//! is the canonical coset representative.

use std::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::snf::reduce_mod_one;
use crate::{rat, IMat, Int, Rat};

/// A torsion point of `R^4 / Z^4` in reduced coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionPoint {
    /// Coordinates, each in `[0, 1)`.
    pub c: [Rat; 4],
}

impl TorsionPoint {
    /// Builds a point, reducing each coordinate modulo 1.
    pub fn new(c: [Rat; 4]) -> Self {
        TorsionPoint {
            c: [
                reduce_mod_one(&c[0]),
                reduce_mod_one(&c[1]),
                reduce_mod_one(&c[2]),
                reduce_mod_one(&c[3]),
            ],
        }
    }

    /// The point `(a/m, b/m, c/m, d/m)` from integer numerators at a common
    /// level `m`.
    pub fn from_level(coords: [i64; 4], level: i64) -> Self {
        assert!(level > 0);
        TorsionPoint::new([
            rat(coords[0], level),
            rat(coords[1], level),
            rat(coords[2], level),
            rat(coords[3], level),
        ])
    }

    /// The origin.
    pub fn zero() -> Self {
        TorsionPoint::from_level([0, 0, 0, 0], 1)
    }

    /// Whether this is the origin.
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Group addition.
    pub fn add(&self, other: &TorsionPoint) -> TorsionPoint {
        TorsionPoint::new([
            &self.c[0] + &other.c[0],
            &self.c[1] + &other.c[1],
            &self.c[2] + &other.c[2],
            &self.c[3] + &other.c[3],
        ])
    }

    /// Group inverse.
    pub fn neg(&self) -> TorsionPoint {
        TorsionPoint::new([
            -self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        ])
    }

    /// Group subtraction.
    pub fn sub(&self, other: &TorsionPoint) -> TorsionPoint {
        self.add(&other.neg())
    }

    /// Integer multiple `k * self`.
    pub fn scale(&self, k: i64) -> TorsionPoint {
        let kr = rat(k, 1);
        TorsionPoint::new([
            &self.c[0] * &kr,
            &self.c[1] * &kr,
            &self.c[2] * &kr,
            &self.c[3] * &kr,
        ])
    }

    /// The exact order in the torsion group: the least `m > 0` with
    /// `m * self = 0`, i.e. the lcm of the coordinate denominators.
    pub fn order(&self) -> u64 {
        let mut m = Int::from(1u32);
        for x in &self.c {
            m = m.lcm(x.denom());
        }
        m.to_u64().expect("torsion order fits in u64")
    }

    /// Image under an integer matrix acting on the torus.
    pub fn apply(&self, m: &IMat) -> TorsionPoint {
        assert_eq!((m.nrows(), m.ncols()), (4, 4));
        let mut out = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = rat(0, 1);
            for j in 0..4 {
                if m[(i, j)].is_zero() || self.c[j].is_zero() {
                    continue;
                }
                acc += Rat::from_integer(m[(i, j)].clone()) * &self.c[j];
            }
            *slot = acc;
        }
        TorsionPoint::new(out)
    }

    /// Fast image under a plain `i64` matrix (rows of length 4), used in the
    /// inner loops of orbit enumeration.
    pub fn apply_i64(&self, m: &[[i64; 4]; 4]) -> TorsionPoint {
        let mut out = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = rat(0, 1);
            for j in 0..4 {
                if m[i][j] == 0 || self.c[j].is_zero() {
                    continue;
                }
                acc += rat(m[i][j], 1) * &self.c[j];
            }
            *slot = acc;
        }
        TorsionPoint::new(out)
    }
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

/// All `m^4` torsion points killed by `m` (coordinates `k/m`).
pub fn points_of_level(m: i64) -> Vec<TorsionPoint> {
    assert!(m > 0);
    let mut out = Vec::with_capacity((m as usize).pow(4));
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    out.push(TorsionPoint::from_level([a, b, c, d], m));
                }
            }
        }
    }
    out
}
