//! Dense exact matrices and Gaussian elimination.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: alloc::vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Scalar>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Solves `self * X = rhs` for a square nonsingular matrix, one column of
    /// `X` per column of `rhs`.
    pub fn solve_many(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.rows });
        }
        let n = self.rows;
        let w = n + rhs.cols;
        let mut aug: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row: Vec<Scalar> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..rhs.cols).map(|j| rhs.get(i, j).clone()));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug[r][col].is_zero()).ok_or(Error::Singular)?;
            aug.swap(col, pivot);
            let inv = aug[col][col].inverse()?;
            if !inv.is_one() {
                for v in aug[col][col..w].iter_mut() {
                    if !v.is_zero() {
                        *v = &*v * &inv;
                    }
                }
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for j in col..w {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &(&factor * &pivot_row[j]);
                    }
                }
            }
        }
        let mut out = Matrix::zeros(&self.field, n, rhs.cols);
        for (i, row) in aug.into_iter().enumerate() {
            for (j, v) in row.into_iter().skip(n).enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve_many(&Matrix::identity(&self.field, self.rows))
    }

    /// Basis of `{x : self * x = 0}` from the reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut a: Vec<Vec<Scalar>> = (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(row, p);
            let inv = a[row][col].inverse().expect("nonzero pivot");
            for v in a[row].iter_mut() {
                *v = &*v * &inv;
            }
            let pr = a[row].clone();
            for (r, other) in a.iter_mut().enumerate() {
                if r != row && !other[col].is_zero() {
                    let factor = other[col].clone();
                    for (x, y) in other.iter_mut().zip(&pr) {
                        *x -= &(&factor * y);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = alloc::vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[r][free];
            }
            basis.push(v);
        }
        basis
    }
}

/// Exact solution of `m * x = b` by pivoting Gaussian elimination.
pub fn linear_solve(m: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>> {
    let rhs = Matrix::from_columns(m.field(), m.rows(), &[b.to_vec()])?;
    Ok(m.solve_many(&rhs)?.column(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rational()
    }

    fn ints(f: &Field, v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| f.int(x)).collect()
    }

    #[test]
    fn identity_solve() {
        let f = q();
        let b = ints(&f, &[3, -4, 7]);
        assert_eq!(linear_solve(&Matrix::identity(&f, 3), &b).unwrap(), b);
    }

    #[test]
    fn upper_triangular() {
        let f = q();
        let m = Matrix::from_rows(&f, &[ints(&f, &[1, 1]), ints(&f, &[0, 1])]).unwrap();
        assert_eq!(linear_solve(&m, &ints(&f, &[2, 1])).unwrap(), ints(&f, &[1, 1]));
    }

    #[test]
    fn needs_row_swap() {
        let f = q();
        let m = Matrix::from_rows(&f, &[ints(&f, &[0, 2]), ints(&f, &[3, 0])]).unwrap();
        let x = linear_solve(&m, &ints(&f, &[4, 6])).unwrap();
        assert_eq!(x, ints(&f, &[2, 2]));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(&f, 2));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = q();
        let m = Matrix::from_rows(&f, &[ints(&f, &[1, 2, 3]), ints(&f, &[2, 4, 6])]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        assert!(Matrix::identity(&f, 3).nullspace().is_empty());
    }

    #[test]
    fn singular() {
        let f = q();
        let m = Matrix::from_rows(&f, &[ints(&f, &[1, 2]), ints(&f, &[2, 4])]).unwrap();
        assert_eq!(linear_solve(&m, &ints(&f, &[1, 1])), Err(Error::Singular));
    }
}
