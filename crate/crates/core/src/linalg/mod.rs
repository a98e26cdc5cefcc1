//! Complex 2x2 and small real dense linear algebra, plus seeded streams.

mod mat2;
mod real;
pub mod rng;

pub use mat2::{
    cosquare, eigenvalues2, hermitian_eigenvalues, inertia2, inertia2_with_tol, inverse2,
    star_congruence, ComplexScalar, Inertia, Mat2, INERTIA_TOL, TOL_SINGULAR,
};
pub(crate) use mat2::{c, I};
pub use real::{real_rank, RealMatrix};
pub use rng::{mix, seeded_rng, Stream};
