//! Smith normal form over a Euclidean integer ring, and its application to
//! solving affine congruences on torsion points of a torus.
//!
//! For an integer matrix `M` the Smith decomposition `U * M * V = D` (with
//! `U`, `V` unimodular and `D` diagonal with a divisibility chain) converts
//! the congruence `M x ≡ b (mod Z^n)` on the torus `R^n / Z^n` into `n`
//! independent scalar congruences `d_i y_i ≡ c_i (mod Z)`.  Each nonzero `d_i`
//! contributes `|d_i|` torsion solutions; a zero `d_i` contributes either no
//! solution or a continuum.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Matrix, Ring};
use crate::{Int, Rat};

/// Scalar requirements for the Smith normal form: an exact Euclidean
/// integer-like ring with signs.
pub trait SnfScalar: Ring + Integer + Signed {}
impl<T> SnfScalar for T where T: Ring + Integer + Signed {}

/// A Smith decomposition `u * m * v = diag(d)` of the input matrix `m`.
#[derive(Clone, Debug)]
pub struct SmithForm<T: SnfScalar> {
    /// Diagonal entries `d_1 | d_2 | ... >= 0`, padded with zeros.
    pub d: Vec<T>,
    /// Unimodular row-operation matrix.
    pub u: Matrix<T>,
    /// Unimodular column-operation matrix.
    pub v: Matrix<T>,
}

impl<T: SnfScalar> SmithForm<T> {
    /// Verifies `u * m * v = diag(d)`, unimodularity of `u`/`v`, nonnegative
    /// diagonal, and the divisibility chain.  Used by oracles and debug
    /// assertions.
    pub fn verify(&self, m: &Matrix<T>) -> bool {
        let prod = self.u.mul(m).mul(&self.v);
        let n = prod.nrows().min(prod.ncols());
        for i in 0..prod.nrows() {
            for j in 0..prod.ncols() {
                let want = if i == j && i < n {
                    self.d[i].clone()
                } else {
                    T::zero()
                };
                if prod[(i, j)] != want {
                    return false;
                }
            }
        }
        let unimodular = |x: &Matrix<T>| {
            let det = x.det();
            det == T::one() || det == -T::one()
        };
        if !unimodular(&self.u) || !unimodular(&self.v) {
            return false;
        }
        for w in self.d.windows(2) {
            if w[0].is_negative() || (!w[0].is_zero() && !(w[1].clone() % w[0].clone()).is_zero())
            {
                return false;
            }
            if w[0].is_zero() && !w[1].is_zero() {
                return false;
            }
        }
        true
    }
}

/// Computes the Smith normal form of an arbitrary rectangular matrix.
pub fn smith_normal_form<T: SnfScalar>(m: &Matrix<T>) -> SmithForm<T> {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a = m.clone();
    let mut u: Matrix<T> = Matrix::identity(rows);
    let mut v: Matrix<T> = Matrix::identity(cols);
    let n = rows.min(cols);

    for t in 0..n {
        loop {
            // Locate a pivot of minimal absolute value in the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[(i, j)].is_zero()
                        && pivot
                            .map(|(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // Trailing block is zero: done.
                break;
            };
            swap_rows(&mut a, &mut u, t, pi);
            swap_cols(&mut a, &mut v, t, pj);
            if a[(t, t)].is_negative() {
                negate_row(&mut a, &mut u, t);
            }

            // Reduce the pivot row and column.
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[(i, t)].is_zero() {
                    let q = div_round(&a[(i, t)], &a[(t, t)]);
                    row_sub(&mut a, &mut u, i, t, &q);
                    if !a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[(t, j)].is_zero() {
                    let q = div_round(&a[(t, j)], &a[(t, t)]);
                    col_sub(&mut a, &mut v, j, t, &q);
                    if !a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce that the pivot divides every
            // entry of the trailing block, else absorb an offending row.
            let mut offender = None;
            'search: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(a[(i, j)].clone() % a[(t, t)].clone()).is_zero() {
                        offender = Some(i);
                        break 'search;
                    }
                }
            }
            match offender {
                Some(i) => {
                    row_add(&mut a, &mut u, t, i);
                }
                None => break,
            }
        }
    }

    let d: Vec<T> = (0..n).map(|i| a[(i, i)].clone()).collect();
    SmithForm { d, u, v }
}

fn swap_rows<T: SnfScalar>(a: &mut Matrix<T>, u: &mut Matrix<T>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..a.ncols() {
        let x = a[(r1, j)].clone();
        a[(r1, j)] = a[(r2, j)].clone();
        a[(r2, j)] = x;
    }
    for j in 0..u.ncols() {
        let x = u[(r1, j)].clone();
        u[(r1, j)] = u[(r2, j)].clone();
        u[(r2, j)] = x;
    }
}

fn swap_cols<T: SnfScalar>(a: &mut Matrix<T>, v: &mut Matrix<T>, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for i in 0..a.nrows() {
        let x = a[(i, c1)].clone();
        a[(i, c1)] = a[(i, c2)].clone();
        a[(i, c2)] = x;
    }
    for i in 0..v.nrows() {
        let x = v[(i, c1)].clone();
        v[(i, c1)] = v[(i, c2)].clone();
        v[(i, c2)] = x;
    }
}

fn negate_row<T: SnfScalar>(a: &mut Matrix<T>, u: &mut Matrix<T>, r: usize) {
    for j in 0..a.ncols() {
        a[(r, j)] = -a[(r, j)].clone();
    }
    for j in 0..u.ncols() {
        u[(r, j)] = -u[(r, j)].clone();
    }
}

/// `row_i -= q * row_t`, mirrored in `u`.
fn row_sub<T: SnfScalar>(a: &mut Matrix<T>, u: &mut Matrix<T>, i: usize, t: usize, q: &T) {
    for j in 0..a.ncols() {
        let s = q.clone() * a[(t, j)].clone();
        a[(i, j)] = a[(i, j)].clone() - s;
    }
    for j in 0..u.ncols() {
        let s = q.clone() * u[(t, j)].clone();
        u[(i, j)] = u[(i, j)].clone() - s;
    }
}

/// `row_t += row_i`, mirrored in `u`.
fn row_add<T: SnfScalar>(a: &mut Matrix<T>, u: &mut Matrix<T>, t: usize, i: usize) {
    for j in 0..a.ncols() {
        let s = a[(i, j)].clone();
        a[(t, j)] = a[(t, j)].clone() + s;
    }
    for j in 0..u.ncols() {
        let s = u[(i, j)].clone();
        u[(t, j)] = u[(t, j)].clone() + s;
    }
}

/// `col_j -= q * col_t`, mirrored in `v`.
fn col_sub<T: SnfScalar>(a: &mut Matrix<T>, v: &mut Matrix<T>, j: usize, t: usize, q: &T) {
    for i in 0..a.nrows() {
        let s = q.clone() * a[(i, t)].clone();
        a[(i, j)] = a[(i, j)].clone() - s;
    }
    for i in 0..v.nrows() {
        let s = q.clone() * v[(i, t)].clone();
        v[(i, j)] = v[(i, j)].clone() - s;
    }
}

/// Division rounded toward the nearest integer, so that the remainder has
/// absolute value at most `|b| / 2`; speeds up the Euclidean descent.
fn div_round<T: SnfScalar>(a: &T, b: &T) -> T {
    let (q, r) = a.div_rem(b);
    let two_r = r.abs() + r.abs();
    if two_r > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + T::one()
        } else {
            q - T::one()
        }
    } else {
        q
    }
}

// ---------------------------------------------------------------------------
// Torsion congruences
// ---------------------------------------------------------------------------

/// The solution set of `M x ≡ b (mod Z^n)` on the torus `R^n / Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CongruenceSolutions {
    /// No solution.
    Empty,
    /// Finitely many torsion solutions, listed with coordinates in `[0, 1)`.
    Finite(Vec<Vec<Rat>>),
    /// A positive-dimensional solution set.
    Infinite,
}

/// Solves `M x ≡ b (mod Z^n)` for `x` in the torus `R^n / Z^n`.
///
/// When `det M != 0` there are exactly `|det M|` solutions, all torsion.
/// When `det M = 0` the set is empty or a continuum, decided per scalar
/// congruence through the Smith form.
pub fn solve_congruence(m: &Matrix<Int>, b: &[Rat]) -> CongruenceSolutions {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "solve_congruence needs a square matrix");
    assert_eq!(n, b.len());
    let snf = smith_normal_form(m);
    debug_assert!(snf.verify(m));
    // y = V^{-1} x, solve D y ≡ U b (mod Z^n), then x = V y.
    let u_rat = snf.u.map(|x| Rat::from_integer(x.clone()));
    let c = u_rat.mul_vec(b);
    // Zero elementary divisors give scalar congruences `0 * y ≡ c_i (mod Z)`:
    // the system is solvable only when every such `c_i` is integral, and then
    // the solution set is a continuum.
    let mut has_zero_divisor = false;
    for i in 0..n {
        if snf.d[i].is_zero() {
            has_zero_divisor = true;
            if !c[i].is_integer() {
                return CongruenceSolutions::Empty;
            }
        }
    }
    if has_zero_divisor {
        return CongruenceSolutions::Infinite;
    }
    let mut per_axis: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let d = &snf.d[i];
        let dr = Rat::from_integer(d.clone());
        let base = &c[i] / &dr;
        let step = Rat::new(Int::one(), d.clone());
        let mut axis = Vec::new();
        let mut k = Int::zero();
        while &k < d {
            axis.push(reduce_mod_one(&(&base + &step * Rat::from_integer(k.clone()))));
            k += 1;
        }
        per_axis.push(axis);
    }
    // Cartesian product of the per-axis solutions, mapped through V.
    let v_rat = snf.v.map(|x| Rat::from_integer(x.clone()));
    let mut ys: Vec<Vec<Rat>> = vec![Vec::new()];
    for axis in &per_axis {
        let mut next = Vec::with_capacity(ys.len() * axis.len());
        for y in &ys {
            for val in axis {
                let mut y2 = y.clone();
                y2.push(val.clone());
                next.push(y2);
            }
        }
        ys = next;
    }
    let sols = ys
        .into_iter()
        .map(|y| v_rat.mul_vec(&y).iter().map(reduce_mod_one).collect())
        .collect();
    CongruenceSolutions::Finite(sols)
}

/// Reduces a rational to its representative in `[0, 1)`.
pub fn reduce_mod_one(x: &Rat) -> Rat {
    let f = x.floor();
    x - f
}
