//! Exact rational dense matrices: products, Kronecker product, Gauss–Jordan
//! elimination, rank and pivot-row extraction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(&'static str),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible")]
    NotInvertible,
}

/// A column vector of rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zeros(len: usize) -> Vector {
        Vector(vec![Rational::zero(); len])
    }

    pub fn from_ints(values: &[i64]) -> Vector {
        Vector(values.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Rational> {
        self.0.iter()
    }
}

impl Index<usize> for Vector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

/// Row-major `rows × cols` matrix. Zero-sized dimensions are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from nested rows; all rows must have equal length.
    /// `cols` is needed to express `n × 0` shapes.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Mat, MatrixError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::DimensionMismatch("ragged rows"));
        }
        let nrows = rows.len();
        Ok(Mat {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for small integer matrices; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
            cols,
        )
        .expect("rows of equal length")
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mat_vec(&self, x: &Vector) -> Result<Vector, MatrixError> {
        if x.len() != self.cols {
            return Err(MatrixError::DimensionMismatch("vector length must equal column count"));
        }
        Ok(Vector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(x.iter())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        ))
    }

    pub fn mat_mul(&self, other: &Mat) -> Result<Mat, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch("inner dimensions differ"));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: entry `(i·rows(B)+k, j·cols(B)+l)` is `A[i,j]·B[k,l]`.
    pub fn kronecker(&self, other: &Mat) -> Mat {
        let (br, bc) = (other.rows, other.cols);
        Mat::from_fn(self.rows * br, self.cols * bc, |r, c| {
            &self[(r / br, c / bc)] * &other[(r % br, c % bc)]
        })
    }

    /// Gauss–Jordan inverse. The 0×0 matrix is its own inverse.
    pub fn invert(&self) -> Result<Mat, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // [A | I] reduced to [I | A⁻¹]
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let pivots = aug.gauss_jordan_in_place(n);
        if pivots.len() < n {
            return Err(MatrixError::NotInvertible);
        }
        Ok(Mat::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Mat {
        let mut m = self.clone();
        m.gauss_jordan_in_place(self.cols);
        m
    }

    /// Gauss–Jordan on the first `pivot_cols` columns, taking the first
    /// nonzero entry at or below the current row as pivot. Returns the
    /// pivot positions.
    fn gauss_jordan_in_place(&mut self, pivot_cols: usize) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let Some(found) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, found);
            let inv = self[(row, col)].recip();
            for j in col..self.cols {
                self[(row, j)] *= &inv;
            }
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for j in col..self.cols {
                    let delta = &factor * &self[(row, j)];
                    self[(r, j)] -= delta;
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// For a matrix in RREF, the position of the leading entry of every
    /// nonzero row.
    pub fn pivot_positions(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .filter_map(|i| self.row(i).iter().position(|v| !v.is_zero()).map(|j| (i, j)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rref().pivot_positions().len()
    }

    /// Indices of a set of rows forming a basis of the row space: the pivot
    /// columns of `rref(Aᵀ)`, ascending.
    pub fn rows_to_keep(&self) -> Vec<usize> {
        self.transpose()
            .rref()
            .pivot_positions()
            .into_iter()
            .map(|(_, col)| col)
            .collect()
    }

    /// The submatrix made of the listed rows, in the listed order.
    pub fn take_rows(&self, indices: &[usize]) -> Mat {
        Mat::from_fn(indices.len(), self.cols, |i, j| self[(indices[i], j)].clone())
    }

    /// The submatrix made of the listed columns, in the listed order.
    pub fn take_cols(&self, indices: &[usize]) -> Mat {
        Mat::from_fn(self.rows, indices.len(), |i, j| self[(i, indices[j])].clone())
    }
}

/// Solves `(F₁ ⊗ … ⊗ F_k)·w = v` for square invertible factors without
/// forming the product, by applying each inverse factor along its own axis.
pub fn solve_kronecker(factors: &[Mat], v: &Vector) -> Result<Vector, MatrixError> {
    let inverses = factors.iter().map(Mat::invert).collect::<Result<Vec<_>, _>>()?;
    let total: usize = factors.iter().map(Mat::rows).product();
    if total != v.len() {
        return Err(MatrixError::DimensionMismatch("vector length must equal product size"));
    }
    let mut w = v.0.clone();
    let mut outer = 1;
    for (axis, inv) in inverses.iter().enumerate() {
        let n = inv.rows();
        let stride: usize = factors[axis + 1..].iter().map(Mat::rows).product();
        for o in 0..outer {
            for s in 0..stride {
                let at = |t: usize| o * n * stride + t * stride + s;
                let fiber: Vec<Rational> = (0..n).map(|t| w[at(t)].clone()).collect();
                for t in 0..n {
                    w[at(t)] = inv
                        .row(t)
                        .iter()
                        .zip(&fiber)
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
                }
            }
        }
        outer *= n;
    }
    Ok(Vector(w))
}

impl Index<(usize, usize)> for Mat {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Result<Mat, MatrixError>;

    fn add(self, rhs: &Mat) -> Result<Mat, MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::DimensionMismatch("shapes differ"));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
