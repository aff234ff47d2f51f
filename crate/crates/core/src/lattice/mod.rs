//! Quadratic forms on ℤ^r and the SL₂(ℤ) action on the upper half-plane.

mod enumerate;
mod gram;
mod sl2;

pub use enumerate::{enumerate_vectors, enumerate_vectors_with_cap, for_each_vector, DEFAULT_CAP};
pub use gram::{cholesky, normalize_det, GramMatrix, LowerTriangular};
pub use sl2::{gram_of_point, reduce_sl2, Sl2, UpperHalfPoint};
pub(crate) use sl2::{reduce_with, ReductionStep};
