use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::Scalar;
use crate::error::{Error, Result};
use crate::par::{self, Parallelism};

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = S::one();
        }
        m
    }

    pub fn scalar(dim: usize, c: S) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { dim, data })
    }

    pub fn from_row_major(dim: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: data.len(),
            });
        }
        Ok(Matrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.data[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[S] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Matrix<T>> {
        Ok(Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &Matrix<S>) -> Result<Matrix<S>> {
        self.mul_with(other, Parallelism::Sequential)
    }

    /// Product with rows computed independently; the result does not depend
    /// on `mode`.
    pub fn mul_with(&self, other: &Matrix<S>, mode: Parallelism) -> Result<Matrix<S>> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let n = self.dim;
        let rows = par::map_range(mode, n, |i| {
            (0..n)
                .map(|j| S::sum_of_products((0..n).map(|k| (self.get(i, k), other.get(k, j)))))
                .collect::<Vec<_>>()
        });
        Ok(Matrix {
            dim: n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn scale(&self, c: &S) -> Matrix<S> {
        self.map(|x| x.times(c))
    }

    pub fn negate(&self) -> Matrix<S> {
        self.map(|x| x.negate())
    }

    pub fn transpose(&self) -> Matrix<S> {
        let n = self.dim;
        let mut data = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { dim: n, data }
    }

    pub fn is_identity(&self) -> bool {
        self.first_difference(&Self::identity(self.dim)).is_none()
    }

    /// First `(row, col)` in row-major order where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix<S>) -> Option<(usize, usize)> {
        if self.dim != other.dim {
            return Some((0, 0));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.dim, k % self.dim))
    }

    /// `Ok(c)` when the matrix is `c * Id`, otherwise the first offending
    /// entry.
    pub fn as_scalar(&self) -> std::result::Result<S, (usize, usize)> {
        let n = self.dim;
        if n == 0 {
            return Ok(S::one());
        }
        let c = self.get(0, 0).clone();
        for i in 0..n {
            for j in 0..n {
                let x = self.get(i, j);
                let ok = if i == j { *x == c } else { x.is_zero() };
                if !ok {
                    return Err((i, j));
                }
            }
        }
        Ok(c)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[&Matrix<S>]) -> Matrix<S> {
        let n: usize = blocks.iter().map(|b| b.dim).sum();
        let mut m = Self::zeros(n);
        let mut off = 0;
        for b in blocks {
            m.place(b, off, off);
            off += b.dim;
        }
        m
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn place(&mut self, block: &Matrix<S>, row: usize, col: usize) {
        for i in 0..block.dim {
            for j in 0..block.dim {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }

    /// The `size x size` block at `(row, col)`.
    pub fn block(&self, row: usize, col: usize, size: usize) -> Matrix<S> {
        let mut data = Vec::with_capacity(size * size);
        for i in 0..size {
            data.extend_from_slice(&self.row(row + i)[col..col + size]);
        }
        Matrix { dim: size, data }
    }

    /// True when the block at `(row, col)` of the given size is zero.
    pub fn block_is_zero(&self, row: usize, col: usize, size: usize) -> bool {
        (0..size).all(|i| self.row(row + i)[col..col + size].iter().all(S::is_zero))
    }
}

impl Matrix<BigRational> {
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    fn row_echelon(&self) -> (Vec<BigRational>, BigRational) {
        // Returns the reduced augmented [A | I] data and the determinant.
        let n = self.dim;
        let w = 2 * n;
        let mut a: Vec<BigRational> = Vec::with_capacity(n * w);
        for i in 0..n {
            a.extend_from_slice(self.row(i));
            for j in 0..n {
                a.push(if i == j { BigRational::from_integer(1.into()) } else { BigRational::zero() });
            }
        }
        let mut det = BigRational::from_integer(1.into());
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * w + col].is_zero()) else {
                return (a, BigRational::zero());
            };
            if p != col {
                for j in 0..w {
                    a.swap(p * w + j, col * w + j);
                }
                det = -det;
            }
            let pivot = a[col * w + col].clone();
            det *= &pivot;
            for j in 0..w {
                a[col * w + j] /= &pivot;
            }
            for r in 0..n {
                if r == col || a[r * w + col].is_zero() {
                    continue;
                }
                let f = a[r * w + col].clone();
                for j in 0..w {
                    let sub = &f * &a[col * w + j];
                    a[r * w + j] -= sub;
                }
            }
        }
        (a, det)
    }

    pub fn determinant(&self) -> BigRational {
        self.row_echelon().1
    }

    /// Gauss–Jordan inverse over the rationals.
    pub fn inverse(&self) -> Result<Matrix<BigRational>> {
        let n = self.dim;
        let (a, det) = self.row_echelon();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let w = 2 * n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend_from_slice(&a[i * w + n..i * w + w]);
        }
        Ok(Matrix { dim: n, data })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn max_abs(&self) -> BigRational {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A matrix that differs from the identity only in a few columns, applied
/// by right multiplication without a dense product.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseGenerator<S> {
    dim: usize,
    /// `(column, [(row, value)])` for every column that is not `e_column`.
    columns: Vec<(usize, Vec<(usize, S)>)>,
}

impl<S: Scalar> SparseGenerator<S> {
    pub fn from_dense(m: &Matrix<S>) -> Self {
        let n = m.dim();
        let mut columns = Vec::new();
        for j in 0..n {
            let is_unit = (0..n).all(|i| {
                let x = m.get(i, j);
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            });
            if !is_unit {
                let col = (0..n)
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect();
                columns.push((j, col));
            }
        }
        SparseGenerator { dim: n, columns }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_dense(&self) -> Matrix<S> {
        let mut m = Matrix::identity(self.dim);
        for (j, col) in &self.columns {
            for i in 0..self.dim {
                m.set(i, *j, S::zero());
            }
            for (i, v) in col {
                m.set(*i, *j, v.clone());
            }
        }
        m
    }

    /// `acc <- acc * self`.
    pub fn apply_right(&self, acc: &mut Matrix<S>) {
        debug_assert_eq!(acc.dim(), self.dim);
        let n = self.dim;
        let mut new_cols: Vec<(usize, Vec<S>)> = Vec::with_capacity(self.columns.len());
        for (j, col) in &self.columns {
            let values = (0..n)
                .map(|r| S::sum_of_products(col.iter().map(|(i, v)| (acc.get(r, *i), v))))
                .collect();
            new_cols.push((*j, values));
        }
        for (j, values) in new_cols {
            for (r, v) in values.into_iter().enumerate() {
                acc.set(r, j, v);
            }
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparseGenerator<T> {
        SparseGenerator {
            dim: self.dim,
            columns: self
                .columns
                .iter()
                .map(|(j, col)| (*j, col.iter().map(|(i, v)| (*i, f(v))).collect()))
                .collect(),
        }
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<SparseGenerator<T>> {
        let mut columns = Vec::with_capacity(self.columns.len());
        for (j, col) in &self.columns {
            let mut c = Vec::with_capacity(col.len());
            for (i, v) in col {
                let x = f(v)?;
                if !x.is_zero() {
                    c.push((*i, x));
                }
            }
            columns.push((*j, c));
        }
        Ok(SparseGenerator {
            dim: self.dim,
            columns,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;

    fn q(rows: &[Vec<i64>]) -> Matrix<BigRational> {
        Matrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn identity_and_permutation() {
        let a = q(&[vec![1, 2, 0], vec![3, -1, 4], vec![0, 5, 6]]);
        let id = Matrix::identity(3);
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(id.mul(&a).unwrap(), a);
        let p = q(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert!(p.mul(&p).unwrap().is_identity());
    }

    #[test]
    fn dimension_mismatch() {
        let a = Matrix::<BigRational>::identity(2);
        let b = Matrix::<BigRational>::identity(3);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch { .. })));
        assert!(Matrix::<BigRational>::from_row_major(2, vec![]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let a = q(&[vec![2, 1, 0], vec![1, 1, 0], vec![0, 3, 1]]);
        assert_eq!(a.determinant(), BigRational::from_integer(1.into()));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        let s = q(&[vec![1, 2], vec![2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
        let sw = q(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(sw.determinant(), BigRational::from_integer((-1).into()));
    }

    #[test]
    fn scalar_detection() {
        let c = BigRational::from_integer(3.into());
        assert_eq!(Matrix::scalar(4, c.clone()).as_scalar(), Ok(c));
        let a = q(&[vec![1, 0], vec![1, 1]]);
        assert_eq!(a.as_scalar(), Err((1, 0)));
    }

    #[test]
    fn blocks() {
        let a = q(&[vec![1, 2], vec![3, 4]]);
        let b = q(&[vec![5]]);
        let s = Matrix::direct_sum(&[&a, &b]);
        assert_eq!(s.dim(), 3);
        assert_eq!(s.block(0, 0, 2), a);
        assert!(s.block_is_zero(0, 2, 1));
        assert_eq!(*s.get(2, 2), BigRational::from_integer(5.into()));
    }

    #[test]
    fn sparse_matches_dense() {
        let g = Matrix::from_rows(vec![
            vec![LaurentPoly::one(), LaurentPoly::q(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::t(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::from_int(2), LaurentPoly::one()],
        ])
        .unwrap();
        let sparse = SparseGenerator::from_dense(&g);
        assert_eq!(sparse.to_dense(), g);
        let mut acc = g.mul(&g).unwrap();
        let dense = acc.mul(&g).unwrap();
        sparse.apply_right(&mut acc);
        assert_eq!(acc, dense);
    }

    #[test]
    fn parallel_product_is_identical() {
        let a = q(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        let b = a.inverse().unwrap();
        assert_eq!(
            a.mul_with(&b, Parallelism::Parallel).unwrap(),
            a.mul_with(&b, Parallelism::Sequential).unwrap()
        );
    }
}
