//! Combinatorics of transmission loci for covers of the line totally ramified
//! at two points.
//!
//! The kernel is window arithmetic in the extended k-affine symmetric group:
//! slipface functions, the Demazure product, reduced words and their
//! truncations, essential twists, locus profiles and splitting types,
//! ramification schedules on chains of elliptic curves, and the annular braid
//! orbit classification of monodromy tuples.

pub mod demazure;
pub mod error;
pub mod perm;
pub mod slipface;
pub mod twists;
pub mod words;

pub mod degen;
pub mod hurwitz;
pub mod loci;

#[cfg(test)]
pub(crate) mod test_support;

pub use error::{Error, Result};
pub use perm::AffinePermutation;
