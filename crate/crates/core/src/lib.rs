//! Exact matrix models of representations of `GL(2n, ℂ)` and `O(2n, ℂ)`,
//! equivariant Hom-space solvers, and a verification harness for the
//! finite-dimensional branching statements built on them.
//!
//! All arithmetic is over the Gaussian rationals [`linalg::GaussRat`]; there is
//! no floating point anywhere in the computation.

pub mod error;
pub mod label;
pub mod lie;
pub mod linalg;
pub mod hom;
pub mod params;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
