//! Dense complex linear algebra, special functions, root finding and
//! quadrature: the shared computational substrate for the rest of the crate.

pub mod bessel;
pub mod eigen;
pub mod matrix;
pub mod quad;
pub mod roots;
pub mod solve;
pub mod svd;

pub use bessel::{bessel_j, bessel_j_complex, bessel_zeros};
pub use eigen::{hermitian_eigen, hermitian_function};
pub use matrix::{dot, vec_add, vec_norm, vec_scale, vec_sub, ComplexMatrix, C64};
pub use quad::{quad_integrate, QuadratureRule};
pub use roots::{find_roots, refine_minimum};
pub use solve::{determinant, inverse, least_squares, solve_linear};
pub use svd::{complement, null_space, orth, svd_rank, SvdRank, DEFAULT_RANK_TOL};
