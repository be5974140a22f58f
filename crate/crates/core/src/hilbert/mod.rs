//! Complex finite-dimensional linear algebra: vectors, matrices, subspaces
//! and their orthogonal projectors.

mod eigen;
mod io;
mod linalg;
mod subspace;
mod tolerance;

pub use eigen::HermitianEigen;
pub use io::MatrixFile;
pub use linalg::{ComplexMatrix, ComplexVector};
pub use subspace::{
    orthonormalize, projector, random_subspace, random_unitary, subspace_from_projector, transform, Subspace,
};
pub(crate) use subspace::eigenspace_above_half;
pub use tolerance::Tolerance;
