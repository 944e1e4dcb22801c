//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers (`BigInt`) and
//! normalized rationals (`BigRational`). Nothing in this module touches
//! floating point.

mod fm;
mod nonneg;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use fm::{lattice_points, Bound, CoordinateBounds, LinearSystem};
pub(crate) use nonneg::in_monoid;
pub use nonneg::{all_nonneg_solutions, solve_nonneg};
pub use snf::{smith_normal_form, SmithForm};

/// Integer vector.
pub type IntVec = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("generator {0} is the zero vector")]
    DegenerateGenerator(usize),
    #[error("negative entry in a nonnegative system")]
    NegativeEntry,
    #[error("coordinate {0} is unbounded")]
    Unbounded(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Builds an `IntVec` from machine integers.
pub fn ivec(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. `cols` is only consulted when `rows` is empty.
    pub fn from_rows(rows: &[IntVec], cols: usize) -> Self {
        let cols = rows.first().map_or(cols, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in IntMat::from_rows"
        );
        IntMat {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<IntVec> = rows.iter().map(|r| ivec(r)).collect();
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(&rows, cols)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[IntVec], rows: usize) -> Self {
        Self::from_rows(cols, rows).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in IntMat::mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch in IntMat::mul_vec");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = factor * &self[(i, src)];
            self[(i, dst)] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -x;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

/// Rank over the rationals of the matrix whose rows are `vs`.
pub fn rank(vs: &[IntVec]) -> usize {
    let Some(width) = vs.first().map(Vec::len) else {
        return 0;
    };
    let mut rows: Vec<IntVec> = vs.to_vec();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let a = rows[r][col].clone();
            let b = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                *x = &*x * &a - y * &b;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// True iff the vectors are linearly independent over Q.
pub fn q_independent(vs: &[IntVec]) -> bool {
    rank(vs) == vs.len()
}

/// Exact inverse of a unimodular matrix.
///
/// If the columns of `b` are a lattice basis, the rows of the inverse are the
/// dual basis.
pub fn invert_unimodular(b: &IntMat) -> Result<IntMat, LinalgError> {
    let det = b.determinant()?;
    if !det.abs().is_one() {
        return Err(LinalgError::NotUnimodular(det));
    }
    let inv = invert_rational(b).expect("unimodular matrix is invertible");
    let n = b.rows();
    let mut out = IntMat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            debug_assert!(inv[i][j].is_integer());
            out[(i, j)] = inv[i][j].to_integer();
        }
    }
    Ok(out)
}

/// Gauss-Jordan inverse over Q. `None` when singular.
pub fn invert_rational(b: &IntMat) -> Option<Vec<Vec<BigRational>>> {
    let n = b.rows();
    assert_eq!(n, b.cols());
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = b
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, p);
        let pivot = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = a[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves the square system `cols · λ = target` over Q, where `cols` lists the
/// columns. `None` if the columns are dependent.
pub fn solve_rational(cols: &[IntVec], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = target.len();
    if cols.len() != n {
        return None;
    }
    let m = IntMat::from_columns(cols, n);
    let inv = invert_rational(&m)?;
    Some(
        inv.iter()
            .map(|row| row.iter().zip(target).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

pub fn gcd_of(xs: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    xs.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_independent_examples() {
        assert!(q_independent(&[ivec(&[1, 0]), ivec(&[2, 1])]));
        assert!(!q_independent(&[ivec(&[1, 1]), ivec(&[2, 2])]));
        assert!(q_independent(&[]));
        assert!(!q_independent(&[ivec(&[0, 0])]));
        assert!(!q_independent(&[ivec(&[1]), ivec(&[2]), ivec(&[3])]));
    }

    #[test]
    fn invert_identity_and_shear() {
        let id = IntMat::identity(3);
        assert_eq!(invert_unimodular(&id).unwrap(), id);
        let shear = IntMat::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            invert_unimodular(&shear).unwrap(),
            IntMat::from_i64(&[&[1, -1], &[0, 1]])
        );
    }

    #[test]
    fn invert_rejects_non_unimodular() {
        let m = IntMat::from_i64(&[&[2, 0], &[0, 1]]);
        assert_eq!(
            invert_unimodular(&m),
            Err(LinalgError::NotUnimodular(BigInt::from(2)))
        );
        let rect = IntMat::from_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(
            invert_unimodular(&rect),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn determinant_small() {
        let m = IntMat::from_i64(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 4]]);
        // cofactor expansion along the second row
        assert_eq!(m.determinant().unwrap(), BigInt::from(-7));
        assert_eq!(IntMat::zeros(0, 0).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn dual_basis_rows() {
        // columns (1,0), (1,1)
        let b = IntMat::from_columns(&[ivec(&[1, 0]), ivec(&[1, 1])], 2);
        let inv = invert_unimodular(&b).unwrap();
        let cols = [ivec(&[1, 0]), ivec(&[1, 1])];
        for i in 0..2 {
            for (j, c) in cols.iter().enumerate() {
                let expect = if i == j { 1 } else { 0 };
                assert_eq!(dot(inv.row(i), c), BigInt::from(expect));
            }
        }
    }
}
