//! Dense matrices and column vectors with explicit dimensions.

use std::fmt;

use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix with at least one row and one column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Column vector of positive dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<T> {
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid(format!(
                "matrix shape {rows}x{cols} has a zero side"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Matrix::new(nrows, ncols, data)
    }

    /// Builds a matrix from an entry function of 0-based `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    /// Assembles a matrix whose columns are `cols`, all of the same dimension.
    pub fn from_columns(cols: &[Vector<T>]) -> Result<Self> {
        let first = cols
            .first()
            .ok_or_else(|| Error::invalid("no columns given"))?;
        let rows = first.dim();
        if let Some(bad) = cols.iter().find(|c| c.dim() != rows) {
            return Err(Error::DimensionMismatch {
                expected: rows,
                got: bad.dim(),
            });
        }
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vector<T> {
        Vector {
            data: (0..self.rows).map(|i| self.get(i, col).clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data: (0..self.cols)
                .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
                .map(|(i, j)| self.get(i, j).clone())
                .collect(),
        }
    }

    /// Ordinary matrix product; requires `self.cols == other.rows`.
    pub fn matmul(&self, other: &Matrix<T>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut data = vec![T::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let slot = &mut data[i * other.cols + j];
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Ordinary matrix-vector product; requires `self.cols == x.dim()`.
    pub fn mul_vec(&self, x: &Vector<T>) -> Result<Vector<T>> {
        if self.cols != x.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.dim(),
            });
        }
        let data = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x.iter())
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect();
        Ok(Vector { data })
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Scalar + FromPrimitive> Matrix<T> {
    /// Convenience constructor from small integer rows.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| from_i64(v)).collect())
                .collect(),
        )
    }
}

impl<T: Scalar> Vector<T> {
    pub fn new(data: Vec<T>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::invalid("vector must have positive dimension"));
        }
        Ok(Vector { data })
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Vector::new(vec![T::zero(); dim])
    }

    pub fn ones(dim: usize) -> Result<Self> {
        Vector::new(vec![T::one(); dim])
    }

    /// The standard basis vector δ_dim^{index+1} (0-based `index`).
    pub fn unit(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::invalid(format!(
                "basis index {index} out of range for dimension {dim}"
            )));
        }
        let mut v = Vector::zeros(dim)?;
        v.data[index] = T::one();
        Ok(v)
    }

    /// All standard basis vectors of V_dim.
    pub fn standard_basis(dim: usize) -> Result<Vec<Self>> {
        if dim == 0 {
            return Err(Error::invalid("vector must have positive dimension"));
        }
        (0..dim).map(|i| Vector::unit(dim, i)).collect()
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.data.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Vector {
            data: self
                .data
                .iter()
                .map(|v| v.clone() * factor.clone())
                .collect(),
        }
    }

    /// Ordinary sum; dimensions must agree. See [`crate::stp::vadd`] for the
    /// cross-dimensional version.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(Vector {
            data: self
                .iter()
                .zip(other.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Vector<U> {
        Vector {
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Scalar + FromPrimitive> Vector<T> {
    pub fn from_i64s(values: &[i64]) -> Result<Self> {
        Vector::new(values.iter().map(|&v| from_i64(v)).collect())
    }
}

fn from_i64<T: FromPrimitive>(v: i64) -> T {
    T::from_i64(v).expect("scalar type cannot represent a small integer")
}

impl<T> std::ops::Index<usize> for Vector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.data[i]
    }
}

impl<T: fmt::Display> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.data.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]ᵀ")
    }
}

impl<T: fmt::Debug> fmt::Debug for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.iter()).finish()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
            if r + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols).collect();
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}
