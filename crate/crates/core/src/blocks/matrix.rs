//! Dense exact matrices over cyclotomic scalars.
//!
//! Sizes stay tiny (block-space dimensions), so the representation is a
//! flat vector and inversion is plain Gauss-Jordan with exact pivoting.

use crate::algebra::Cyclotomic;
use crate::error::{OpError, OpResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, conductor: u64) -> Self {
        Matrix { rows, cols, data: vec![Cyclotomic::zero(conductor); rows * cols] }
    }

    pub fn identity(n: usize, conductor: u64) -> Self {
        let mut m = Self::zero(n, n, conductor);
        for i in 0..n {
            m.set(i, i, Cyclotomic::one(conductor));
        }
        m
    }

    pub fn scalar(value: Cyclotomic) -> Self {
        Matrix { rows: 1, cols: 1, data: vec![value] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclotomic) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Cyclotomic) {
        let cur = self.get(r, c).add(v);
        self.set(r, c, cur);
    }

    /// Matrix product self · other (applies `other` first).
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let conductor = if self.data.is_empty() {
            other.data.first().map_or(1, |c| c.conductor())
        } else {
            self.data[0].conductor()
        };
        let mut out = Matrix::zero(self.rows, other.cols, conductor);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(i, j, &a.mul(b));
                }
            }
        }
        out
    }

    pub fn scalar_mul(&self, s: &Cyclotomic) -> Matrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = v.mul(s);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if i == j {
                    if !v.is_one() {
                        return false;
                    }
                } else if !v.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Gauss-Jordan inverse; errors on non-square or singular input.
    pub fn inverse(&self) -> OpResult<Matrix> {
        if self.rows != self.cols {
            return Err(OpError::Other("cannot invert a non-square matrix".into()));
        }
        let n = self.rows;
        let conductor = self.data.first().map_or(1, |c| c.conductor());
        if n == 0 {
            return Ok(Matrix::zero(0, 0, conductor));
        }
        let mut a = self.clone();
        let mut inv = Matrix::identity(n, conductor);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a.get(r, col).is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => return Err(OpError::Other("singular matrix".into())),
            };
            if pivot_row != col {
                for j in 0..n {
                    let x = a.get(col, j).clone();
                    let y = a.get(pivot_row, j).clone();
                    a.set(col, j, y);
                    a.set(pivot_row, j, x);
                    let x = inv.get(col, j).clone();
                    let y = inv.get(pivot_row, j).clone();
                    inv.set(col, j, y);
                    inv.set(pivot_row, j, x);
                }
            }
            let pivot = a.get(col, col).clone();
            let pinv = pivot.inv().map_err(|_| OpError::Other("singular matrix".into()))?;
            for j in 0..n {
                a.set(col, j, a.get(col, j).mul(&pinv));
                inv.set(col, j, inv.get(col, j).mul(&pinv));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let av = a.get(r, j).sub(&factor.mul(a.get(col, j)));
                    a.set(r, j, av);
                    let iv = inv.get(r, j).sub(&factor.mul(inv.get(col, j)));
                    inv.set(r, j, iv);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// Row-major rendering for reports and failure witnesses.
    pub fn render(&self) -> String {
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            rows.push(format!("[{}]", cells.join(", ")));
        }
        format!("[{}]", rows.join(", "))
    }
}
