//! Exact computer algebra for Dowling-type polynomial families.
//!
//! The pipeline runs from exponential Riordan arrays to their production
//! matrices, from tridiagonal production matrices to three-term recurrences
//! and orthogonal polynomials, and from there to moments, continued
//! fractions and Hankel transforms. All arithmetic is exact, and every
//! routine is generic over the coefficient [`Ring`](coeffring::Ring) so it
//! runs both at rational parameter points and symbolically in `x` and `m`.

#![allow(clippy::needless_range_loop)]

pub mod cfrac;
pub mod cli;
pub mod coeffring;
pub mod combinat;
pub mod dowling;
pub mod error;
pub mod hankel;
pub mod matrix;
pub mod orthopoly;
pub mod riordan;
pub mod series;
pub mod verify;

pub use coeffring::{MPoly, Rational, Ring};
pub use dowling::{FamilyId, FamilyParams};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use orthopoly::TTRecurrence;
pub use riordan::{ExpRiordan, ProductionMethod};
pub use series::Series;
