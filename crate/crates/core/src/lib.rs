//! Exact continued fractions, plane lattice cones and the combinatorics of
//! their singularities.

pub mod cf;
pub mod error;
pub mod graphs;
pub mod lattice;
pub mod singularities;
pub mod zigzag;

pub use cf::Rational;
pub use error::{Error, Result};
