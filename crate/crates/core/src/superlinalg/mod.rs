//! Exact scalars and Z2-graded linear algebra: spaces, vectors, maps and
//! graded subspaces in canonical echelon form.

pub mod echelon;
mod map;
mod scalar;
mod space;
mod subspace;

pub use map::{elementary_label, gl_space, SuperMap};
pub use scalar::{Field, Scalar};
pub use space::{Parity, SuperSpace, SuperVector};
pub use subspace::{all_graded_subspaces, GradedSubspace};
