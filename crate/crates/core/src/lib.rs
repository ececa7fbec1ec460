//! Exact computations with omni-Lie superalgebras.
//!
//! The crate builds `E = gl(V) ⊕ V` over a finite-dimensional super vector
//! space `V`, checks the Leibniz and Lie 2-superalgebra identities it
//! satisfies, and relates Dirac structures of `E` to Lie superalgebra
//! structures on subspaces of `V`. All arithmetic is exact, over the
//! rationals or a prime field of odd characteristic.

pub mod dirac;
pub mod error;
pub mod lie2;
pub mod liesuper;
pub mod omni;
pub mod superlinalg;
pub mod verdict;

pub use error::{AlgebraError, Result};
pub use verdict::{Failure, Limit, Residual, Verdict};
