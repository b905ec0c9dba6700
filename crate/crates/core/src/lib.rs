//! Exact invariants of signed shifts of finite type.
//!
//! Graphs carry a sign on every edge. From a signed graph this crate computes
//! signed periodic-point counts, the signed dimension group and its
//! automorphism, Bowen–Franks groups, homology of the Putnam complex for an
//! s/u-bijective pair, and zeta functions as exact rational functions.

pub mod algebra;
pub mod dimension;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod putnam;
pub mod zeta;

pub use error::{Error, Result};
