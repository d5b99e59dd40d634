//! Bigraded intersection homology for braids.
//!
//! For a braid word and each pair of reference curves in the punctured disk,
//! this crate builds the bigraded cochain complex generated by their
//! intersection points, computes its integral cohomology, and checks that
//! the graded Euler characteristic recovers the reduced Burau matrix entry.
//! The same machinery detects the trivial braid from the homology pattern.

pub mod braid;
pub mod curve;
pub mod error;
pub mod floer;
pub mod grading;
pub mod laurent;
pub mod snf;
pub mod verify;

pub use error::{Error, Result};
