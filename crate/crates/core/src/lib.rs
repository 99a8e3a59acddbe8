//! Numerical boundary-triple toolkit for self-adjoint extension theory.
//!
//! The crate implements the calculus that parameterizes the closed extensions
//! of a symmetric operator through boundary data: finite-dimensional linear
//! relations, gamma-fields and Weyl (Dirichlet-to-Neumann) functions, the
//! Gelfand scale built from Im M(i), the regularization transform that turns a
//! quasi boundary triple into an ordinary one, and the Krein resolvent formula
//! with per-point spectral classification. Everything is validated on exactly
//! solvable Laplacian models: the interval (0,1) and the unit disk in a
//! Fourier-mode truncation, plus a truncation family demonstrating how the
//! scale degenerates when the trace space fails to be dense.

pub mod error;
pub mod extensions;
pub mod models;
pub mod numerics;
pub mod relations;
pub mod report;
pub mod triple;

pub use error::{Error, Result};
pub use numerics::{ComplexMatrix, QuadratureRule, C64};
pub use relations::{LinearRelation, RelationClass, RelationParts, SpectrumPointKind};
pub use report::SpectralReport;
pub use triple::{BoundaryTriple, GelfandScale, OrdinaryTriple, WeylSample};
