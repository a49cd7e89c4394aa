//! Exact linear algebra.
//!
//! [`LabeledMatrix`] is the dense, labelled carrier used in reports. The
//! chain-complex code works on sparse column vectors through [`kernel`] and
//! [`EchelonSpan`], which scale to the larger path spaces.

mod dense;
pub mod sparse;

pub use dense::{nullspace_basis, rank, rref, solve, LabeledMatrix};
pub use sparse::{kernel, rank_of, EchelonSpan, Kernel, SparseVec};
