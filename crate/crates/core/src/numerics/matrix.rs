//! Dense complex matrices and vectors, row-major storage.
//!
//! Everything in the toolkit is desk-scale (dimensions up to a few hundred),
//! so plain `Vec<Complex64>` storage with straightforward loops is the whole
//! story. The inner product convention is the physics one used throughout:
//! `(u, v) = sum_i u_i * conj(v_i)`, linear in the first argument.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from a slice of row slices (used mostly in tests).
    pub fn from_rows(rows: &[&[C64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Self::from_fn(r, c, |i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn diag(entries: &[C64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    /// Matrix with the given columns.
    pub fn from_cols(cols: &[Vec<C64>]) -> Self {
        let c = cols.len();
        let r = if c == 0 { 0 } else { cols[0].len() };
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for i in 0..r {
                m[(i, j)] = col[i];
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

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[C64]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
    }

    /// Columns `j0..j1` as a new matrix.
    pub fn col_range(&self, j0: usize, j1: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.rows, j1 - j0, |i, j| self[(i, j0 + j)])
    }

    /// Rows `i0..i1` as a new matrix.
    pub fn row_range(&self, i0: usize, i1: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(i1 - i0, self.cols, |i, j| self[(i0 + i, j)])
    }

    pub fn hstack(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.rows, other.rows);
        ComplexMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                other[(i, j - self.cols)]
            }
        })
    }

    pub fn vstack(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, other.cols);
        ComplexMatrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self[(i, j)]
            } else {
                other[(i - self.rows, j)]
            }
        })
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        let mut out = vec![C64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn sub(&self, other: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)])
    }

    pub fn scale(&self, s: C64) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| s * self[(i, j)])
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `max_ij |A_ij - conj(A_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn check_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Hermitian part `(A + A*)/2`.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        assert!(self.is_square());
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| {
            0.5 * (self[(i, j)] + self[(j, i)].conj())
        })
    }

    /// `Im A := (A - A*)/(2i)`, a Hermitian matrix.
    pub fn imag_part_operator(&self) -> ComplexMatrix {
        assert!(self.is_square());
        let half_i = C64::new(0.0, -0.5); // 1/(2i)
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| {
            half_i * (self[(i, j)] - self[(j, i)].conj())
        })
    }

    /// Real part operator `(A + A*)/2` — alias kept for readability at call sites.
    pub fn real_part_operator(&self) -> ComplexMatrix {
        self.hermitian_part()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// `(u, v) = sum u_i conj(v_i)`.
pub fn dot(u: &[C64], v: &[C64]) -> C64 {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum()
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn vec_add(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(s: C64, v: &[C64]) -> Vec<C64> {
    v.iter().map(|z| s * z).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn mul_and_adjoint() {
        let a = ComplexMatrix::from_rows(&[&[c(1.0, 1.0), c(0.0, 2.0)], &[c(3.0, 0.0), c(1.0, -1.0)]]);
        let id = ComplexMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        let aa = a.adjoint().adjoint();
        assert_eq!(aa, a);
        // (Au, v) = (u, A* v) on a couple of vectors
        let u = vec![c(1.0, 2.0), c(-1.0, 0.5)];
        let v = vec![c(0.3, -0.7), c(2.0, 1.0)];
        let lhs = dot(&a.mul_vec(&u), &v);
        let rhs = dot(&u, &a.adjoint().mul_vec(&v));
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn hermitian_deviation_detects_skew() {
        let h = ComplexMatrix::from_rows(&[&[c(1.0, 0.0), c(2.0, 1.0)], &[c(2.0, -1.0), c(-3.0, 0.0)]]);
        assert!(h.hermitian_deviation() < 1e-15);
        let mut g = h.clone();
        g[(0, 1)] = c(2.0, 1.5);
        assert!(g.hermitian_deviation() > 0.4);
    }

    #[test]
    fn imag_part_operator_is_hermitian() {
        let a = ComplexMatrix::from_rows(&[&[c(1.0, 2.0), c(0.5, -0.25)], &[c(-1.0, 0.75), c(0.0, -1.0)]]);
        let im = a.imag_part_operator();
        assert!(im.hermitian_deviation() < 1e-15);
        // A = Re A + i Im A
        let re = a.real_part_operator();
        let rebuilt = re.add(&im.scale(c(0.0, 1.0)));
        assert!(rebuilt.sub(&a).max_abs() < 1e-15);
    }
}
