//! Small dense linear algebra: general square matrices, packed symmetric
//! matrices, a cyclic Jacobi eigensolver and the 2×2 complex Hermitian
//! routines used for qubit states.
//!
//! Everything here is sized for desk-scale problems (dimension ≤ 64) and is
//! deterministic: identical input always produces bit-identical output.

mod eigen;
mod hermitian;

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};

pub use eigen::{det, sqrt_psd, sym_eigen, trace, Spectrum, JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE, TOL_EIG};
pub use hermitian::Hermitian2;

/// Dense row-major matrix with `rows × cols` entries.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from a list of rows, all of which must have equal length.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Shape {
                    len: row.len(),
                    expected: cols,
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Matrix::zeros(values.len(), values.len());
        for (i, &x) in values.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Max-norm distance; `INFINITY` when the shapes differ.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// `‖MᵀM − I‖_max`, the departure from having orthonormal columns.
    pub fn orthogonality_defect(&self) -> f64 {
        let gram = &self.transpose() * self;
        gram.max_abs_diff(&Matrix::identity(self.cols))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Dense real symmetric matrix.
///
/// Only the lower triangle is stored, so `a[(i, j)] == a[(j, i)]` holds
/// exactly for every value of this type.
#[derive(Clone, PartialEq)]
pub struct SymmetricMatrix {
    dim: usize,
    packed: Vec<f64>,
}

#[inline]
fn packed_index(i: usize, j: usize) -> usize {
    let (hi, lo) = if i >= j { (i, j) } else { (j, i) };
    hi * (hi + 1) / 2 + lo
}

impl SymmetricMatrix {
    /// Builds a matrix from `f(i, j)` evaluated on the lower triangle `i ≥ j`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(dim >= 1, "symmetric matrix dimension must be at least 1");
        let mut packed = Vec::with_capacity(dim * (dim + 1) / 2);
        for i in 0..dim {
            for j in 0..=i {
                packed.push(f(i, j));
            }
        }
        SymmetricMatrix { dim, packed }
    }

    pub fn identity(dim: usize) -> Self {
        SymmetricMatrix::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        SymmetricMatrix::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    /// Builds from full rows; the input must be square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::EmptyVector);
        }
        for row in rows {
            if row.len() != dim {
                return Err(Error::Shape {
                    len: row.len(),
                    expected: dim,
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if let Some(j) = (0..i).find(|&j| row[j] != rows[j][i]) {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
        Ok(SymmetricMatrix::from_fn(dim, |i, j| rows[i][j]))
    }

    /// Projects a square matrix onto the symmetric matrices, `(M + Mᵀ)/2`.
    pub fn symmetrize(m: &Matrix) -> Self {
        assert_eq!(m.rows(), m.cols(), "symmetrize needs a square matrix");
        SymmetricMatrix::from_fn(m.rows(), |i, j| 0.5 * (m[(i, j)] + m[(j, i)]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| self[(i, j)])
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.to_matrix().to_rows()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, alpha: f64) -> SymmetricMatrix {
        SymmetricMatrix {
            dim: self.dim,
            packed: self.packed.iter().map(|x| alpha * x).collect(),
        }
    }

    /// `A / tr A`.
    pub fn normalized(&self) -> SymmetricMatrix {
        self.scale(1.0 / self.trace())
    }

    /// `A²`, symmetrized against round-off.
    pub fn square(&self) -> SymmetricMatrix {
        let a = self.to_matrix();
        SymmetricMatrix::symmetrize(&(&a * &a))
    }

    /// `A · M · A` for symmetric `A` and `M`, which is symmetric.
    pub fn sandwich(&self, middle: &SymmetricMatrix) -> SymmetricMatrix {
        assert_eq!(self.dim, middle.dim, "sandwich dimension mismatch");
        let a = self.to_matrix();
        let prod = &(&a * &middle.to_matrix()) * &a;
        SymmetricMatrix::symmetrize(&prod)
    }

    /// `O · A · Oᵀ` for a square `O`.
    pub fn congruence(&self, o: &Matrix) -> SymmetricMatrix {
        assert_eq!(o.cols(), self.dim, "congruence dimension mismatch");
        let prod = &(o * &self.to_matrix()) * &o.transpose();
        SymmetricMatrix::symmetrize(&prod)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: x.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * x[j]).sum())
            .collect())
    }

    pub fn max_abs(&self) -> f64 {
        self.packed.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Max-norm distance; `INFINITY` when the dimensions differ.
    pub fn max_abs_diff(&self, other: &SymmetricMatrix) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.packed
            .iter()
            .zip(&other.packed)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

impl Index<(usize, usize)> for SymmetricMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        assert!(i < self.dim && j < self.dim, "index out of bounds");
        &self.packed[packed_index(i, j)]
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.to_matrix(), f)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_storage_is_symmetric() {
        let a = SymmetricMatrix::from_fn(4, |i, j| (10 * i + j) as f64);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(a[(i, j)], a[(j, i)]);
            }
        }
        assert_eq!(a[(3, 1)], 31.0);
        assert_eq!(a[(1, 3)], 31.0);
    }

    #[test]
    fn from_rows_rejects_asymmetric_input() {
        let rows = vec![vec![1.0, 2.0], vec![2.5, 1.0]];
        assert_eq!(
            SymmetricMatrix::from_rows(&rows),
            Err(Error::NotSymmetric { row: 1, col: 0 })
        );
        let ragged = vec![vec![1.0, 2.0], vec![2.0]];
        assert!(matches!(
            SymmetricMatrix::from_rows(&ragged),
            Err(Error::Shape { .. })
        ));
    }

    #[test]
    fn sandwich_matches_explicit_product() {
        let a = SymmetricMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 3.0]]).unwrap();
        let m = SymmetricMatrix::from_rows(&[vec![1.0, -1.0], vec![-1.0, 4.0]]).unwrap();
        let am = &a.to_matrix() * &m.to_matrix();
        let expected = &am * &a.to_matrix();
        assert!(a.sandwich(&m).to_matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn trace_of_identity() {
        assert_eq!(SymmetricMatrix::identity(5).trace(), 5.0);
    }
}
