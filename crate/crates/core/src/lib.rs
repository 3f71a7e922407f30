//! Exact verification kernel for odd symplectic superalgebra, the BV
//! Laplacian on half-forms, simplicial descent of gauge conditions, and the
//! light-cone gauge of the ten-dimensional superparticle.

#![allow(clippy::needless_range_loop, clippy::too_many_arguments, clippy::type_complexity)]

pub mod bvcalc;
pub mod clifford;
pub mod descent;
pub mod parallel;
pub mod random;
pub mod simplexforms;
pub mod superlinalg;
pub mod superparticle;
pub mod suite;
pub mod superpoly;

/// Exact rational scalars.
pub type Q = num_rational::BigRational;

pub use superpoly::{AlgebraError, Poly, Universe, UniverseBuilder};
