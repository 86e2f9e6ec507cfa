//! Combinatorial polytopes from slack-matrix supports, order polytopes of
//! finite posets, exact slack and toric ideals, and certificates that a
//! polytope is graphic (its slack ideal equals the toric ideal of its
//! non-incidence graph).

pub mod canon;
pub mod certify;
pub mod cli;
pub mod cas;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod order_polytope;
pub mod polytope;
pub mod poset;

pub use error::{Error, Result};
