//! Rank-revealing decomposition via the Hermitian eigenproblem of `A*A`.
//!
//! Adequate at the conditioning levels occurring in this toolkit; left
//! singular vectors are re-orthogonalized with modified Gram-Schmidt to
//! keep the range basis clean when singular values are clustered.

use num_complex::Complex64 as C64;

use super::eigen::hermitian_eigen;
use super::matrix::{dot, vec_norm, vec_scale, vec_sub, ComplexMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct SvdRank {
    pub rank: usize,
    /// Descending singular values (all of them, length = cols).
    pub singular_values: Vec<f64>,
    /// Orthonormal basis of `ker A` (cols x (cols - rank)).
    pub null_basis: ComplexMatrix,
    /// Orthonormal basis of `ran A` (rows x rank).
    pub range_basis: ComplexMatrix,
    /// Right singular vectors matching `singular_values` (cols x cols).
    pub right_vectors: ComplexMatrix,
}

/// Rank, singular values, null basis and range basis of `A`.
///
/// `rank = #{sigma_k > tol * sigma_max}`; a zero matrix has rank 0 and a
/// full identity null basis on the domain side.
pub fn svd_rank(a: &ComplexMatrix, tol: f64) -> Result<SvdRank> {
    if a.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("rank tolerance must be positive, got {tol}")));
    }
    let n = a.cols();
    let gram = a.adjoint().mul(a);
    let (eigs, v) = hermitian_eigen(&gram, 1e-9 * gram.max_abs().max(1.0))?;
    // eigs ascending; singular values descending.
    let mut singular_values: Vec<f64> = eigs.iter().rev().map(|&x| x.max(0.0).sqrt()).collect();
    let right_vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, n - 1 - j)]);
    let smax = singular_values.first().copied().unwrap_or(0.0);
    let cut = tol * smax;
    let rank = singular_values.iter().take_while(|&&s| s > cut && smax > 0.0).count();
    for s in singular_values.iter_mut().skip(rank) {
        // Below the cut the Gram eigenvalues are noise-level; clamp tiny
        // negatives introduced by the squaring.
        if !s.is_finite() {
            *s = 0.0;
        }
    }

    let null_basis = right_vectors.col_range(rank, n);

    // Range basis: A v_k / sigma_k for the kept directions, re-orthogonalized.
    let mut range_cols: Vec<Vec<C64>> = Vec::with_capacity(rank);
    for k in 0..rank {
        let mut u = a.mul_vec(&right_vectors.col(k));
        for prev in &range_cols {
            let proj = dot(&u, prev);
            u = vec_sub(&u, &vec_scale(proj, prev));
        }
        // Second MGS pass for safety when directions are nearly dependent.
        for prev in &range_cols {
            let proj = dot(&u, prev);
            u = vec_sub(&u, &vec_scale(proj, prev));
        }
        let nrm = vec_norm(&u);
        if nrm > 0.0 {
            range_cols.push(vec_scale(C64::new(1.0 / nrm, 0.0), &u));
        }
    }
    let range_basis = if range_cols.is_empty() {
        ComplexMatrix::zeros(a.rows(), 0)
    } else {
        ComplexMatrix::from_cols(&range_cols)
    };

    Ok(SvdRank {
        rank: range_basis.cols(),
        singular_values,
        null_basis,
        range_basis,
        right_vectors,
    })
}

/// Orthonormal basis of the column span of `A` (empty matrix allowed).
pub fn orth(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    if a.cols() == 0 {
        return Ok(ComplexMatrix::zeros(a.rows(), 0));
    }
    Ok(svd_rank(a, tol)?.range_basis)
}

/// Orthonormal basis of `ker A`.
pub fn null_space(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    Ok(svd_rank(a, tol)?.null_basis)
}

/// Orthonormal basis of the orthogonal complement of `span(cols of B)` in the
/// ambient space of dimension `B.rows()`.
pub fn complement(b: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    if b.cols() == 0 {
        return Ok(ComplexMatrix::identity(b.rows()));
    }
    // v is orthogonal to all columns of B  <=>  B* v = 0.
    null_space(&b.adjoint(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn zero_matrix() {
        let a = ComplexMatrix::zeros(3, 3);
        let s = svd_rank(&a, 1e-10).unwrap();
        assert_eq!(s.rank, 0);
        assert_eq!(s.null_basis.cols(), 3);
        // null basis spans the whole domain: orthonormal 3x3
        let g = s.null_basis.adjoint().mul(&s.null_basis);
        assert!(g.sub(&ComplexMatrix::identity(3)).max_abs() < 1e-12);
    }

    #[test]
    fn identity_matrix() {
        let a = ComplexMatrix::identity(4);
        let s = svd_rank(&a, 1e-10).unwrap();
        assert_eq!(s.rank, 4);
        assert_eq!(s.null_basis.cols(), 0);
        for k in 0..4 {
            assert!((s.singular_values[k] - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn rank_one_outer_product() {
        let u = [c(1.0, 2.0), c(0.0, -1.0), c(3.0, 0.5)];
        let v = [c(2.0, 0.0), c(-1.0, 1.0)];
        let a = ComplexMatrix::from_fn(3, 2, |i, j| u[i] * v[j].conj());
        let s = svd_rank(&a, 1e-10).unwrap();
        assert_eq!(s.rank, 1);
        let nu = vec_norm(&u);
        let nv = vec_norm(&v);
        assert!((s.singular_values[0] - nu * nv).abs() < 1e-12 * nu * nv);
    }

    #[test]
    fn null_and_range_are_consistent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let rows = rng.gen_range(2..7);
            let cols = rng.gen_range(1..7);
            let r = rng.gen_range(0..=cols.min(rows));
            // random matrix of rank r
            let b = ComplexMatrix::from_fn(rows, r, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let ct = ComplexMatrix::from_fn(r, cols, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
            let a = b.mul(&ct);
            let s = svd_rank(&a, 1e-10).unwrap();
            assert_eq!(s.rank + s.null_basis.cols(), cols);
            if s.null_basis.cols() > 0 {
                assert!(a.mul(&s.null_basis).max_abs() < 1e-10 * a.max_abs().max(1.0));
            }
            if s.rank > 0 {
                let g = s.range_basis.adjoint().mul(&s.range_basis);
                assert!(g.sub(&ComplexMatrix::identity(s.rank)).max_abs() < 1e-11);
            }
        }
    }

    #[test]
    fn complement_of_span() {
        let b = ComplexMatrix::from_real_rows(&[&[1.0], &[0.0], &[0.0]]);
        let comp = complement(&b, 1e-10).unwrap();
        assert_eq!(comp.cols(), 2);
        assert!(b.adjoint().mul(&comp).max_abs() < 1e-13);
    }
}
