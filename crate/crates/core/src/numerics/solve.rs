//! Linear solves: Gaussian elimination with partial pivoting for square
//! systems, SVD-based minimal-norm least squares otherwise.

use num_complex::Complex64 as C64;

use super::matrix::ComplexMatrix;
use super::svd::svd_rank;
use crate::error::{Error, Result};

/// Solve `A x = b`.
///
/// For square `A` an exact solve is attempted and rank deficiency below
/// `tol` is an error. Overdetermined systems get the minimal-norm
/// least-squares solution.
pub fn solve_linear(a: &ComplexMatrix, b: &[C64], tol: f64) -> Result<Vec<C64>> {
    if a.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    if a.is_square() {
        match gepp_solve(a, b) {
            Ok(x) => Ok(x),
            Err(Error::SingularSystem { rank, dim }) => Err(Error::SingularSystem { rank, dim }),
            Err(e) => Err(e),
        }
    } else {
        least_squares(a, b, tol)
    }
}

/// Minimal-norm least-squares solution via the rank-revealing decomposition.
pub fn least_squares(a: &ComplexMatrix, b: &[C64], tol: f64) -> Result<Vec<C64>> {
    let s = svd_rank(a, tol)?;
    // x = sum_k (u_k, b)/sigma_k * v_k  over kept directions
    let mut x = vec![C64::new(0.0, 0.0); a.cols()];
    for k in 0..s.rank {
        let uk = s.range_basis.col(k);
        let coeff: C64 = b
            .iter()
            .zip(&uk)
            .map(|(bi, ui)| bi * ui.conj())
            .sum::<C64>()
            / s.singular_values[k];
        let vk = s.right_vectors.col(k);
        for (xi, vi) in x.iter_mut().zip(&vk) {
            *xi += coeff * vi;
        }
    }
    Ok(x)
}

/// Gaussian elimination with partial pivoting.
fn gepp_solve(a: &ComplexMatrix, b: &[C64]) -> Result<Vec<C64>> {
    let n = a.rows();
    let mut m = a.clone();
    let mut x: Vec<C64> = b.to_vec();
    let scale = m.max_abs().max(1e-300);
    for k in 0..n {
        // pivot
        let mut piv = k;
        let mut best = m[(k, k)].norm();
        for i in (k + 1)..n {
            let v = m[(i, k)].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if best <= 1e-14 * scale {
            return Err(Error::SingularSystem { rank: k, dim: n });
        }
        if piv != k {
            for j in 0..n {
                let t = m[(k, j)];
                m[(k, j)] = m[(piv, j)];
                m[(piv, j)] = t;
            }
            x.swap(k, piv);
        }
        let d = m[(k, k)];
        for i in (k + 1)..n {
            let f = m[(i, k)] / d;
            if f.norm() == 0.0 {
                continue;
            }
            for j in k..n {
                let mkj = m[(k, j)];
                m[(i, j)] -= f * mkj;
            }
            let xk = x[k];
            x[i] -= f * xk;
        }
    }
    for k in (0..n).rev() {
        let mut acc = x[k];
        for j in (k + 1)..n {
            acc -= m[(k, j)] * x[j];
        }
        x[k] = acc / m[(k, k)];
    }
    Ok(x)
}

/// Matrix inverse through column-wise GEPP solves.
pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_square()?;
    let n = a.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![C64::new(0.0, 0.0); n];
        e[j] = C64::new(1.0, 0.0);
        cols.push(gepp_solve(a, &e)?);
    }
    Ok(ComplexMatrix::from_cols(&cols))
}

/// Determinant via the pivoted elimination; sign tracked through row swaps.
pub fn determinant(a: &ComplexMatrix) -> Result<C64> {
    a.check_square()?;
    let n = a.rows();
    let mut m = a.clone();
    let mut det = C64::new(1.0, 0.0);
    for k in 0..n {
        let mut piv = k;
        let mut best = m[(k, k)].norm();
        for i in (k + 1)..n {
            let v = m[(i, k)].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if best == 0.0 {
            return Ok(C64::new(0.0, 0.0));
        }
        if piv != k {
            for j in 0..n {
                let t = m[(k, j)];
                m[(k, j)] = m[(piv, j)];
                m[(piv, j)] = t;
            }
            det = -det;
        }
        let d = m[(k, k)];
        det *= d;
        for i in (k + 1)..n {
            let f = m[(i, k)] / d;
            for j in k..n {
                let mkj = m[(k, j)];
                m[(i, j)] -= f * mkj;
            }
        }
    }
    Ok(det)
}
