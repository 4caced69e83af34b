//! Exact computations with the Soergel bimodule `B = R_{k,l} (x)_{k+l} R_{k,l}`.
//!
//! The crate builds the degree-`2kl` bimodule map `R_{k,l} -> B`, checks the
//! bimodule property by ideal membership in the presentation `P = R/I`, and
//! computes the Hochschild homology of `B` as graded `q,t`-series, both from
//! closed formulas and by direct Koszul-complex computation.

pub mod error;
pub mod groebner;
pub mod partitions;
pub mod polycore;
pub mod qhomology;
pub mod schur;
pub mod selftest;
pub mod soergel;

pub use error::{Error, Result};
