//! Exact computations with Lie algebras graded by groups.
//!
//! The crate represents a graded algebra by rational structure constants on a
//! homogeneous basis, one group label per basis vector. On top of that it
//! checks that nonzero nested brackets of components only involve pairwise
//! commuting labels, and that noncommuting labels generate orthogonal graded
//! ideals. The latter yields certificates that an algebra is not graded-prime.

pub mod constructions;
pub mod document;
pub mod error;
pub mod grading;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod theorem;

pub use error::{Error, Result};
pub use grading::GradedAlgebra;
pub use group::{GroupContext, GroupElement};
pub use lie::LieAlgebra;
pub use linalg::{Rational, Subspace, Vector};
