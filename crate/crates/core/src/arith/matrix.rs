//! Dense matrices over a [`Ring`]: products, unit-pivot Gauss-Jordan inversion and the
//! division-free (Berkowitz) characteristic polynomial.

use super::{FqElement, Ring, ZqElement};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

pub type ZqMatrix = Matrix<ZqElement>;
pub type FqMatrix = Matrix<FqElement>;

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(ring.zero(), |acc, k| {
                ring.add(&acc, &ring.mul(self.get(i, k), other.get(k, j)))
            })
        })
    }

    /// Gauss-Jordan elimination choosing a unit pivot in every column.
    pub fn inverse<R: Ring<Elem = E>>(&self, ring: &R) -> Result<Self> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(ring, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| ring.is_unit(a.get(r, col)))
                .ok_or(Error::NonUnitDeterminant)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let scale = ring.inv(a.get(col, col)).ok_or(Error::NonUnitDeterminant)?;
            a.scale_row(ring, col, &scale);
            inv.scale_row(ring, col, &scale);
            for r in 0..n {
                if r == col || ring.is_zero(a.get(r, col)) {
                    continue;
                }
                let factor = a.get(r, col).clone();
                a.add_row_multiple(ring, r, col, &factor);
                inv.add_row_multiple(ring, r, col, &factor);
            }
        }
        Ok(inv)
    }

    /// Coefficients of `det(I - t A)` in ascending powers of `t` (length n + 1).
    ///
    /// Berkowitz's algorithm: no divisions, so it is exact over Z/p^k as well.
    pub fn reversed_charpoly<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<E> {
        assert!(self.is_square());
        let n = self.rows;
        // coefficients of det(x I - A_r), highest degree first
        let mut c = vec![ring.one()];
        for r in 0..n {
            // A_{r+1} = [[A_r, S], [R, a]]
            let a = self.get(r, r).clone();
            let mut col: Vec<E> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<E> = (0..r).map(|j| self.get(r, j).clone()).collect();
            // first column of the Toeplitz matrix: 1, -a, -R S, -R A S, ..
            let mut toeplitz = Vec::with_capacity(r + 2);
            toeplitz.push(ring.one());
            toeplitz.push(ring.neg(&a));
            for _ in 0..r {
                let dot = row
                    .iter()
                    .zip(&col)
                    .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)));
                toeplitz.push(ring.neg(&dot));
                col = (0..r)
                    .map(|i| {
                        (0..r).fold(ring.zero(), |acc, k| {
                            ring.add(&acc, &ring.mul(self.get(i, k), &col[k]))
                        })
                    })
                    .collect();
            }
            let next: Vec<E> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(ring.zero(), |acc, j| {
                        ring.add(&acc, &ring.mul(&toeplitz[i - j], &c[j]))
                    })
                })
                .collect();
            c = next;
        }
        c
    }

    pub fn det<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        let n = self.rows;
        let top = self.reversed_charpoly(ring).pop().expect("nonempty");
        if n.is_multiple_of(2) {
            top
        } else {
            ring.neg(&top)
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn scale_row<R: Ring<Elem = E>>(&mut self, ring: &R, i: usize, s: &E) {
        for k in 0..self.cols {
            let v = ring.mul(self.get(i, k), s);
            self.set(i, k, v);
        }
    }

    /// row_target -= factor * row_source
    fn add_row_multiple<R: Ring<Elem = E>>(&mut self, ring: &R, target: usize, source: usize, factor: &E) {
        for k in 0..self.cols {
            let v = ring.sub(self.get(target, k), &ring.mul(factor, self.get(source, k)));
            self.set(target, k, v);
        }
    }
}
