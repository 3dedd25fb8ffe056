//! Exact arithmetic in the cyclotomic field `Q(zeta_12)` and eigenline
//! computations for finite-order `2 x 2` matrices over it.
//!
//! The field is `Q[z] / (z^4 - z^2 + 1)` where `z` is a primitive twelfth
//! root of unity.  It contains `i = z^3`, `zeta_3 = z^2 - 1` and
//! `zeta_6 = z^2`, so every complex multiplication encountered on the torus
//! models (orders 2, 3, 4, 6 and the binary dihedral/tetrahedral actions)
//! lives in `2 x 2` matrices over this one field, and all eigenvalues are
//! twelfth roots of unity.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::matrix::Matrix;
use crate::{rat, CMat, Rat};

/// An element `c[0] + c[1] z + c[2] z^2 + c[3] z^3` of `Q(zeta_12)`,
/// with `z^4 = z^2 - 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycNumber {
    /// Coordinates in the power basis `1, z, z^2, z^3`.
    pub c: [Rat; 4],
}

impl CycNumber {
    /// Builds an element from its four power-basis coordinates.
    pub fn new(c: [Rat; 4]) -> Self {
        CycNumber { c }
    }

    /// Embeds a rational number.
    pub fn from_rat(r: Rat) -> Self {
        CycNumber {
            c: [r, rat(0, 1), rat(0, 1), rat(0, 1)],
        }
    }

    /// Embeds an integer.
    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(rat(n, 1))
    }

    /// The generator `z = zeta_12` (a primitive twelfth root of unity).
    pub fn zeta12() -> Self {
        CycNumber {
            c: [rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)],
        }
    }

    /// The imaginary unit `i = z^3`.
    pub fn i() -> Self {
        CycNumber {
            c: [rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)],
        }
    }

    /// A primitive cube root of unity, `zeta_3 = z^2 - 1`.
    pub fn zeta3() -> Self {
        CycNumber {
            c: [rat(-1, 1), rat(0, 1), rat(1, 1), rat(0, 1)],
        }
    }

    /// A primitive sixth root of unity, `zeta_6 = z^2`.
    pub fn zeta6() -> Self {
        CycNumber {
            c: [rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1)],
        }
    }

    /// `z^k` for any integer exponent `k` (reduced modulo 12).
    pub fn root_of_unity(k: i64) -> Self {
        let k = k.rem_euclid(12) as u32;
        let mut out = CycNumber::one();
        for _ in 0..k {
            out = out * CycNumber::zeta12();
        }
        out
    }

    /// All twelve twelfth roots of unity, `z^0 .. z^11`.
    pub fn all_roots_of_unity() -> Vec<Self> {
        (0..12).map(Self::root_of_unity).collect()
    }

    /// Multiplicative inverse; panics on zero (callers guard).
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(zeta_12)");
        // Columns of the multiplication-by-self matrix in the power basis.
        let cols: Vec<CycNumber> = (0..4)
            .map(|j| self.clone() * Self::root_of_unity(j))
            .collect();
        let m: Matrix<Rat> = Matrix::from_rows(
            (0..4)
                .map(|i| (0..4).map(|j| cols[j].c[i].clone()).collect())
                .collect(),
        );
        let e0 = vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        let x = m
            .solve(&e0)
            .expect("multiplication matrix of a nonzero field element is invertible");
        CycNumber {
            c: [x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()],
        }
    }

    /// Complex conjugate, the automorphism `z -> z^{-1} = z - z^3`.
    pub fn conj(&self) -> Self {
        let zbar = CycNumber::zeta12() - CycNumber::i(); // z - z^3 = z^{-1}
        let mut out = CycNumber::from_rat(self.c[0].clone());
        let mut p = CycNumber::one();
        for k in 1..4 {
            p = p * zbar.clone();
            out = out + CycNumber::from_rat(self.c[k].clone()) * p.clone();
        }
        out
    }

    /// `self^k` for a nonnegative exponent.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = CycNumber::one();
        for _ in 0..k {
            out = out * self.clone();
        }
        out
    }
}

impl Zero for CycNumber {
    fn zero() -> Self {
        CycNumber {
            c: [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
        }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl One for CycNumber {
    fn one() -> Self {
        CycNumber {
            c: [rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
        }
    }
}

impl Add for CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: CycNumber) -> CycNumber {
        CycNumber {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub for CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: CycNumber) -> CycNumber {
        self + (-rhs)
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            c: [
                -self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }
}

impl Mul for CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: CycNumber) -> CycNumber {
        // Degree-6 convolution, then reduce with z^4 = z^2 - 1,
        // z^5 = z^3 - z, z^6 = -1.
        let mut conv = vec![rat(0, 1); 7];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                conv[i + j] = &conv[i + j] + &(&self.c[i] * &rhs.c[j]);
            }
        }
        CycNumber {
            c: [
                &(&conv[0] - &conv[4]) - &conv[6],
                &conv[1] - &conv[5],
                &conv[2] + &conv[4],
                &conv[3] + &conv[5],
            ],
        }
    }
}

impl Div for CycNumber {
    type Output = CycNumber;
    fn div(self, rhs: CycNumber) -> CycNumber {
        self * rhs.inv()
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = Vec::new();
        for (k, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if var.is_empty() {
                terms.push(format!("{coeff}"));
            } else if coeff.is_one() {
                terms.push(var);
            } else if (-coeff.clone()).is_one() {
                terms.push(format!("-{var}"));
            } else {
                terms.push(format!("{coeff}*{var}"));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

// ---------------------------------------------------------------------------
// Projective lines and eigenlines
// ---------------------------------------------------------------------------

/// A line through the origin of `C^2`, stored as the unique representative
/// vector whose first nonzero coordinate is `1`.  This canonical form makes
/// equality and ordering structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    /// Normalized direction vector.
    pub v: [CycNumber; 2],
}

impl Line {
    /// Builds the line spanned by a nonzero vector.
    pub fn new(a: CycNumber, b: CycNumber) -> Self {
        if !a.is_zero() {
            let ai = a.inv();
            Line {
                v: [CycNumber::one(), b * ai],
            }
        } else {
            assert!(!b.is_zero(), "line through the zero vector");
            Line {
                v: [CycNumber::zero(), CycNumber::one()],
            }
        }
    }

    /// The image line under an invertible matrix.
    pub fn apply(&self, m: &CMat) -> Line {
        let w = m.mul_vec(&[self.v[0].clone(), self.v[1].clone()]);
        Line::new(w[0].clone(), w[1].clone())
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.v[0], self.v[1])
    }
}

/// Eigenlines of a finite-order `2 x 2` matrix over `Q(zeta_12)`, returned
/// as `(eigenvalue, line)` pairs.
///
/// Finite order makes every eigenvalue a twelfth root of unity, so all
/// twelve are tried; for each, the kernel of `m - lambda` yields the lines.
/// Scalar matrices (`m = lambda * id`) return the two coordinate axes as
/// representatives of the full eigenplane.
pub fn eigen_lines(m: &CMat) -> Vec<(CycNumber, Line)> {
    assert_eq!((m.nrows(), m.ncols()), (2, 2));
    let mut out = Vec::new();
    for lambda in CycNumber::all_roots_of_unity() {
        let shifted = m.sub(&CMat::identity(2).scale(&lambda));
        for v in shifted.kernel_basis() {
            out.push((lambda.clone(), Line::new(v[0].clone(), v[1].clone())));
        }
    }
    out
}
