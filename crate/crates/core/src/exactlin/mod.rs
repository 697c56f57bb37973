//! Exact dense linear algebra over the rationals.
//!
//! Everything downstream (hom spaces, kernels, syzygies, the whole functor
//! calculus) reduces to the handful of operations in here, so they are all
//! deterministic: `rref` is the unique reduced echelon form, kernel bases set
//! free variables to 1 in increasing column order, image bases are pivot
//! columns of the input. Repeated runs are bit-identical.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{RatMatrix, Rref};
pub use scalar::Rat;
pub use subspace::{is_contained, same_span, subspace_ops, SubspaceOps};
