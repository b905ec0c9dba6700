//! Dense matrices over exact rings.
//!
//! [`IntMatrix`] and [`RationalMatrix`] are the two instantiations used
//! throughout the crate; everything generic only needs ring operations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RationalMatrix = Matrix<BigRational>;

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Columns given as vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a.clone() * b.clone();
                        let slot = &mut out.data[i * rhs.cols + j];
                        *slot = slot.clone() + prod;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn pow(&self, mut n: u32) -> Result<Self> {
        let size = self.ensure_square()?;
        let mut base = self.clone();
        let mut acc = Self::identity(size);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<T> {
        let n = self.ensure_square()?;
        Ok((0..n).fold(T::zero(), |acc, i| acc + self[(i, i)].clone()))
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum<'a, I: IntoIterator<Item = &'a Self>>(blocks: I) -> Self
    where
        T: 'a,
    {
        let blocks: Vec<&Self> = blocks.into_iter().collect();
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Multiplies the matrix by a column vector.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for j in 0..self.cols {
            let s = self[(source, j)].clone();
            if !s.is_zero() {
                let t = self[(target, j)].clone();
                self[(target, j)] = t + factor.clone() * s;
            }
        }
    }

    /// col[target] += factor * col[source]
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for i in 0..self.rows {
            let s = self[(i, source)].clone();
            if !s.is_zero() {
                let t = self[(i, target)].clone();
                self[(i, target)] = t + factor.clone() * s;
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = self[(i, j)].clone();
            self[(i, j)] = -x;
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn to_rational(&self) -> RationalMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn determinant(&self) -> Result<BigInt> {
        let n = self.ensure_square()?;
        let cp = crate::algebra::charpoly::char_poly(self)?;
        // det(tI - A) at t = 0 is (-1)^n det(A)
        let c0 = cp.coeff(0);
        Ok(if n % 2 == 0 { c0 } else { -c0 })
    }
}

impl RationalMatrix {
    /// Converts back to integers when every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(|x| x.is_integer()) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_power() {
        let a = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        let a5 = a.pow(5).unwrap();
        assert_eq!(a5, IntMatrix::from_i64_rows(&[&[8, 5], &[5, 3]]));
        assert_eq!(a.pow(0).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn shape_errors() {
        let a = IntMatrix::zeros(2, 3);
        assert!(matches!(a.trace(), Err(Error::NotSquare { .. })));
        assert!(a.checked_mul(&a).is_err());
        assert!(IntMatrix::new(2, 2, vec![BigInt::zero(); 3]).is_err());
    }

    #[test]
    fn direct_sum_layout() {
        let a = IntMatrix::from_i64_rows(&[&[2]]);
        let b = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        let s = IntMatrix::direct_sum([&a, &b]);
        assert_eq!(
            s,
            IntMatrix::from_i64_rows(&[&[2, 0, 0], &[0, 1, 1], &[0, 1, 0]])
        );
        let empty = IntMatrix::direct_sum(std::iter::empty());
        assert_eq!((empty.rows(), empty.cols()), (0, 0));
    }

    #[test]
    fn determinant_small() {
        let a = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.determinant().unwrap(), BigInt::from(1));
        let b = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(b.determinant().unwrap(), BigInt::from(-1));
    }
}
