//! Exact dense linear algebra over Q(sqrt(d)).

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        Matrix {
            rows,
            cols,
            data: vec![Scalar::from_int(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::from_int(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i).clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// Gauss-Jordan inversion with exact division; the pivot is the first
    /// nonzero entry in the column, which keeps the elimination deterministic.
    /// On failure the reported kernel vector certifies rank deficiency.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);

        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a.get(r, col).is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => {
                    return Err(Error::Singular {
                        form: None,
                        kernel: self
                            .kernel_vector()
                            .expect("rank-deficient matrix has a kernel vector")
                            .iter()
                            .map(Scalar::to_string)
                            .collect(),
                    })
                }
            };
            if pivot_row != col {
                a.swap_rows(pivot_row, col);
                inv.swap_rows(pivot_row, col);
            }
            let pivot_inv = a.get(col, col).inv()?;
            a.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let factor = a.get(r, col).clone();
                    a.sub_scaled_row(r, col, &factor);
                    inv.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    /// A nonzero vector v with M v = 0 (column action), if one exists.
    pub fn kernel_vector(&self) -> Option<Vec<Scalar>> {
        let n = self.rows;
        let m = self.cols;
        let mut a = self.clone();
        // forward elimination to row echelon form, tracking pivot columns
        let mut pivot_cols = Vec::new();
        let mut row = 0usize;
        for col in 0..m {
            if row >= n {
                break;
            }
            let pr = (row..n).find(|&r| !a.get(r, col).is_zero());
            let pr = match pr {
                Some(r) => r,
                None => continue,
            };
            if pr != row {
                a.swap_rows(pr, row);
            }
            let pivot_inv = a.get(row, col).inv().ok()?;
            a.scale_row(row, &pivot_inv);
            for r in 0..n {
                if r != row && !a.get(r, col).is_zero() {
                    let factor = a.get(r, col).clone();
                    a.sub_scaled_row(r, col, &factor);
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        let free_col = (0..m).find(|c| !pivot_cols.contains(c))?;
        let mut v = vec![Scalar::from_int(0); m];
        v[free_col] = Scalar::from_int(1);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a.get(r, free_col).clone();
        }
        Some(v)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn scale_row(&mut self, i: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(i, c) * s;
            self.set(i, c, v);
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(target, c) - &(self.get(source, c) * factor);
            self.set(target, c, v);
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Scalar::from_int(0);
            for k in 0..self.cols {
                acc += &(self.get(i, k) * rhs.get(k, j));
            }
            acc
        })
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| -self.get(i, j).clone())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = Matrix::identity(4);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn rotation_block_inverse() {
        let j = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(j.inverse().unwrap(), m(&[&[0, -1], &[1, 0]]));
        assert!((&j * &j.inverse().unwrap()).is_identity());
    }

    #[test]
    fn singular_reports_kernel() {
        let s = m(&[&[1, 2], &[2, 4]]);
        match s.inverse() {
            Err(Error::Singular { kernel, .. }) => {
                assert_eq!(kernel, vec!["-2".to_string(), "1".to_string()]);
            }
            other => panic!("expected singular, got {other:?}"),
        }
    }

    #[test]
    fn antisymmetry_detection() {
        assert!(m(&[&[0, 1], &[-1, 0]]).is_antisymmetric());
        assert!(!m(&[&[0, 1], &[1, 0]]).is_antisymmetric());
        assert!(m(&[&[1, 2], &[2, 3]]).is_symmetric());
    }
}
