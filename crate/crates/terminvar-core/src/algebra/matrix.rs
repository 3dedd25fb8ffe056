//! Dense matrices over an exact scalar ring.
//!
//! The matrix type is generic over any exact commutative ring scalar (big
//! integers, big rationals, cyclotomic numbers).  Dimensions in this crate are
//! tiny — at most six — so the implementations favour clarity and exactness
//! over asymptotic cleverness: determinants are computed by Laplace expansion
//! and rank/kernel by plain Gaussian elimination over a field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// Scalar traits
// ---------------------------------------------------------------------------

/// An exact commutative ring scalar.
///
/// This is a trait alias: any type with exact equality and the four ring
/// operations qualifies.  All scalars used in this crate (`Int`, `Rat`,
/// [`crate::algebra::cyclotomic::CycNumber`]) implement it automatically.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// An exact field scalar: a [`Ring`] with division.
///
/// Division is only ever invoked on nonzero divisors.
pub trait Field: Ring + std::ops::Div<Output = Self> {}

impl<T> Field for T where T: Ring + std::ops::Div<Output = Self> {}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

/// A dense `rows x cols` matrix stored row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// The `rows x cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Iterator over the entries of row `i`.
    pub fn row(&self, i: usize) -> impl Iterator<Item = &T> {
        self.data[i * self.cols..(i + 1) * self.cols].iter()
    }

    /// Applies `f` entrywise, possibly changing the scalar type.
    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    /// Entrywise sum.
    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Entrywise difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// Entrywise negation.
    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// `self^k` for a square matrix, `k >= 0`.
    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Whether this is the identity matrix.
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// Block-diagonal assembly of square blocks.
    pub fn block_diag(blocks: &[Matrix<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zero(n, n);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, b.cols, "block_diag needs square blocks");
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        m
    }

    /// Vertical stack of matrices with equal column counts.
    pub fn vstack(parts: &[Matrix<T>]) -> Self {
        let cols = parts.first().map_or(0, |p| p.cols);
        assert!(parts.iter().all(|p| p.cols == cols));
        let rows = parts.iter().map(|p| p.rows).sum();
        Matrix {
            rows,
            cols,
            data: parts.iter().flat_map(|p| p.data.iter().cloned()).collect(),
        }
    }

    /// Determinant by Laplace expansion along the first row.
    ///
    /// Exponential in the dimension, which never exceeds six here.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        match self.rows {
            0 => T::one(),
            1 => self[(0, 0)].clone(),
            _ => {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if self[(0, j)].is_zero() {
                        continue;
                    }
                    let minor = self.minor(0, j);
                    let term = self[(0, j)].clone() * minor.det();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form; returns `(rref, pivot_columns)`.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv_lead = T::one() / m[(r, c)].clone();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv_lead.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let sub = f.clone() * m[(r, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank over the coefficient field.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{ v : self * v = 0 }`.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        for &f in &free {
            let mut v = vec![T::zero(); self.cols];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves the square system `self * x = b`; `None` when singular.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (m, pivots) = aug.rref();
        if pivots.len() != self.cols || pivots.contains(&self.cols) {
            return None;
        }
        Some((0..self.cols).map(|i| m[(i, self.cols)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// Exterior square
// ---------------------------------------------------------------------------

/// The induced action of a `4 x 4` matrix on the exterior square `Λ^2 Z^4`,
/// as a `6 x 6` matrix in the lexicographic basis
/// `e1∧e2, e1∧e3, e1∧e4, e2∧e3, e2∧e4, e3∧e4`.
///
/// This is the action of a torus automorphism on `H^2` of the torus (up to the
/// identification `H^2 = Λ^2 H^1` and dualization, which do not affect ranks
/// of fixed subspaces).
pub fn exterior_square<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    assert_eq!((m.nrows(), m.ncols()), (4, 4), "exterior_square needs 4x4");
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut out = Matrix::zero(6, 6);
    for (r, &(i, j)) in pairs.iter().enumerate() {
        for (c, &(k, l)) in pairs.iter().enumerate() {
            // Coefficient of e_k∧e_l in (M e_?)∧(M e_?) applied to e_i∧e_j:
            // the 2x2 minor of M with rows {k,l}, columns {i,j}.
            let a = m[(k, i)].clone() * m[(l, j)].clone();
            let b = m[(k, j)].clone() * m[(l, i)].clone();
            out[(r, c)] = a - b;
        }
    }
    // The matrix above is indexed (row = target pair, col = source pair); we
    // built entries transposed, so fix the orientation.
    out.transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat, IMat, Int, QMat};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rand_imat(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> IMat {
        Matrix::from_rows(
            (0..n)
                .map(|_| (0..n).map(|_| int(rng.gen_range(lo..=hi))).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_and_product() {
        let id: IMat = Matrix::identity(4);
        assert!(id.is_identity());
        let mut rng = StdRng::seed_from_u64(1);
        for _ in 0..20 {
            let m = rand_imat(&mut rng, 4, -5, 5);
            assert_eq!(m.mul(&id), m);
            assert_eq!(id.mul(&m), m);
        }
    }

    #[test]
    fn det_multiplicative() {
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..50 {
            let a = rand_imat(&mut rng, 4, -4, 4);
            let b = rand_imat(&mut rng, 4, -4, 4);
            assert_eq!(a.mul(&b).det(), a.det() * b.det());
        }
    }

    #[test]
    fn det_against_rank() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..50 {
            let a = rand_imat(&mut rng, 4, -3, 3);
            let q: QMat = a.map(|x| crate::Rat::from_integer(x.clone()));
            let full_rank = q.rank() == 4;
            assert_eq!(full_rank, !a.det().is_zero());
        }
    }

    #[test]
    fn solve_and_kernel() {
        let a: QMat = Matrix::from_rows(vec![
            vec![rat(1, 1), rat(2, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
            vec![rat(1, 1), rat(3, 1), rat(1, 1)],
        ]);
        // Third row = first + second, so the matrix is singular.
        assert_eq!(a.rank(), 2);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        let img = a.mul_vec(&k[0]);
        assert!(img.iter().all(|x| x.is_zero()));

        let b: QMat = Matrix::from_rows(vec![
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1)],
        ]);
        let sol = b.solve(&[rat(5, 1), rat(3, 1)]).unwrap();
        assert_eq!(sol, vec![rat(2, 1), rat(1, 1)]);
        assert!(b.solve(&[rat(1, 1), rat(1, 1)]).is_some());
        let sing: QMat = Matrix::from_rows(vec![
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(2, 1), rat(2, 1)],
        ]);
        assert!(sing.solve(&[rat(1, 1), rat(0, 1)]).is_none());
    }

    /// Oracle: the exterior square computed here must agree with a direct
    /// expansion of `(M e_i) ∧ (M e_j)` in the wedge basis.
    fn exterior_square_direct(m: &IMat) -> IMat {
        let pairs = [(0usize, 1usize), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut out: IMat = Matrix::zero(6, 6);
        for (c, &(i, j)) in pairs.iter().enumerate() {
            // wedge of columns i and j of M
            for (r, &(k, l)) in pairs.iter().enumerate() {
                let v = m[(k, i)].clone() * m[(l, j)].clone()
                    - m[(l, i)].clone() * m[(k, j)].clone();
                out[(r, c)] = v;
            }
        }
        out
    }

    #[test]
    fn exterior_square_matches_direct_expansion() {
        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..100 {
            let m = rand_imat(&mut rng, 4, -5, 5);
            assert_eq!(exterior_square(&m), exterior_square_direct(&m));
        }
    }

    #[test]
    fn exterior_square_is_a_homomorphism() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..100 {
            let a = rand_imat(&mut rng, 4, -4, 4);
            let b = rand_imat(&mut rng, 4, -4, 4);
            assert_eq!(
                exterior_square(&a.mul(&b)),
                exterior_square(&a).mul(&exterior_square(&b))
            );
        }
        let id: IMat = Matrix::identity(4);
        assert!(exterior_square(&id).is_identity());
        let neg = id.neg();
        assert!(exterior_square(&neg).is_identity());
    }

    #[test]
    fn exterior_square_det() {
        // det(Λ^2 M) = det(M)^3 for 4x4 M.
        let mut rng = StdRng::seed_from_u64(6);
        for _ in 0..30 {
            let m = rand_imat(&mut rng, 4, -3, 3);
            let d: Int = m.det();
            assert_eq!(exterior_square(&m).det(), d.clone() * d.clone() * d);
        }
    }
}
