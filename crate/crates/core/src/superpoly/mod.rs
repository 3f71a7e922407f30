//! Exact Z x Z/2-graded supercommutative polynomial algebra.
//!
//! Coefficients are rationals; ħ, algebraic constants (`c^2 = 1 - s^2`,
//! `pstar^2 = p1^2 + ... + p8^2`), nilpotent parameters and odd constants
//! are generators of the same universe, so every scalar of the tower is
//! itself a [`Poly`].

mod mono;
mod ops;
pub mod parse;
mod poly;
mod universe;

pub use mono::Mono;
pub use ops::{berezin, derivation, gaussian_moment, laurent_coeff, partial, partial_formal, substitute, Assignment};
pub use parse::parse_poly;
pub use poly::Poly;
pub use universe::{Generator, Kind, Relation, Universe, UniverseBuilder};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("generator `{0}` belongs to a different universe")]
    UniverseMismatch(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot differentiate by `{0}` (formal constant or form)")]
    NotDifferentiable(String),
    #[error("parity mismatch for `{name}`: generator parity {expected}, value parity {got}")]
    ParityMismatch { name: String, expected: u8, got: String },
    #[error("generator `{0}` repeated in Berezin integration list")]
    RepeatedGenerator(String),
    #[error("`{0}` is not odd")]
    NotOdd(String),
    #[error("residual odd generator `{0}` in Gaussian moment")]
    ResidualOdd(String),
    #[error("negative power of `{0}` in Gaussian moment")]
    NegativePower(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests;
