//! Gluing of BV integrals over a Čech cover.
//!
//! Everything lives in one Gaussian-dressed Darboux chart: the "open sets"
//! of the cover are labels carrying the polynomial partition of unity and a
//! gauge fermion, and every restriction map is the identity.

mod cochain;
pub mod examples;
mod family;
mod lie;
mod phi;
pub mod scenario;
mod space;
mod trace;

#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::simplexforms::SimplexError;
use crate::superpoly::AlgebraError;

pub use cochain::{Template, TwCochain};
pub use family::{check_eta, compute_eta, ms_residual, LagrangianFamily};
pub use lie::{LieSuperAlgebra, MomentMap};
pub use phi::{sequences, CechModel};
pub use space::{DescentSpace, SpaceConfig};
pub use trace::{FamilySet, TraceReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DescentError {
    #[error("family has no generating one-form yet")]
    EtaMissing,
    #[error("family is not Lagrangian-closed: {0}")]
    NotClosed(String),
    #[error("generating one-form fails its defining equations: {0}")]
    EtaCheck(String),
    #[error("half-form outside the Gaussian class: {0}")]
    NotGaussian(String),
    #[error("partition of unity does not sum to 1: residual {0}")]
    PouSum(String),
    #[error("unknown open set {0}")]
    UnknownIndex(usize),
    #[error("no Lagrangian family for sequence {0:?}")]
    MissingFamily(Vec<usize>),
    #[error("no cochain component for sequence {0:?}")]
    MissingComponent(Vec<usize>),
    #[error("Thom-Whitney compatibility fails: {0}")]
    Incompatible(String),
    #[error("nerve truncation unsound: {0}")]
    Truncation(String),
    #[error("cochain is not closed: residual {0}")]
    NotCocycle(String),
    #[error("Lie superalgebra structure constants invalid: {0}")]
    BadStructure(String),
    #[error("moment map squares to {0}, exponential is not a two-term sum")]
    MuSquare(String),
    #[error("scenario: {0}")]
    Scenario(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Simplex(#[from] SimplexError),
}
