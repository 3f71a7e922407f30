//! World-line fields of the superparticle in a pointwise jet model, the
//! light-cone gauge restrictions, the field redefinition, the momentum-space
//! cover and the zeta values behind the regularized Berezinian.
//!
//! Every field component is a generator together with its world-line jets
//! `f, ∂f, ∂²f, ∂³f`. Integrands are polynomials in these, with `dt` left
//! implicit; equality of integrals is equality modulo `∂`-exact terms.

mod action;
mod cover;
mod jet;
pub mod zeta;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::clifford::{Chirality, CliffordError};
use crate::superpoly::{AlgebraError, Kind, Poly, Universe, UniverseBuilder};

pub use action::{Frame, Gauge, MomentRecord, Particle, Term, TowerCheck};
pub use cover::{circle_points, partition_phi, ramp, CoverMembership, MomentumPoint};
pub use jet::{JetAlgebra, Shell};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParticleError {
    #[error("jet order {0} exceeds the registry limit")]
    JetOrder(usize),
    #[error("point is outside U: {0}")]
    OutsideU(String),
    #[error("zeta argument: {0}")]
    Zeta(String),
    #[error("registry: {0}")]
    Registry(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
}

pub const MAX_JET: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Scalar,
    Vector,
    Covector,
    Spinor(Chirality),
}

impl Shape {
    pub fn len(self) -> usize {
        match self {
            Shape::Scalar => 1,
            Shape::Vector | Shape::Covector => 10,
            Shape::Spinor(_) => 16,
        }
    }
}

/// One world-line field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub name: String,
    pub ghost: i64,
    /// Grassmann parity of the component functions.
    pub parity: u8,
    /// Total parity as tabulated for the model; differs from `parity` only
    /// for the spinor antifields, where it includes the one-form degree.
    pub printed_parity: u8,
    pub form_degree: u8,
    pub shape: Shape,
    pub antifield: bool,
    pub partner: String,
}

/// Fields up to the tower cutoff `N`, their jets, and the auxiliary constants.
#[derive(Clone, Debug)]
pub struct FieldRegistry {
    pub cutoff: usize,
    pub fields: Vec<FieldSpec>,
    pub u: Arc<Universe>,
    /// `(field, component) -> jets by order`.
    pub jets: BTreeMap<(String, usize), Vec<u16>>,
}

fn th(n: usize) -> String {
    format!("th{n}")
}

fn thp(n: usize) -> String {
    format!("thp{n}")
}

fn spinor_chirality(n: usize) -> Chirality {
    if n % 2 == 0 {
        Chirality::Plus
    } else {
        Chirality::Minus
    }
}

impl FieldRegistry {
    pub fn new(cutoff: usize) -> Self {
        let mut fields = Vec::new();
        let mut add = |name: &str, ghost, parity, printed, form, shape, anti, partner: &str| {
            fields.push(FieldSpec {
                name: name.into(),
                ghost,
                parity,
                printed_parity: printed,
                form_degree: form,
                shape,
                antifield: anti,
                partner: partner.into(),
            })
        };
        // momenta first: they rank lowest for integration by parts
        add("p", 0, 0, 0, 0, Shape::Covector, false, "pp");
        add("x", 0, 0, 0, 0, Shape::Vector, false, "xp");
        add("e", 0, 0, 0, 1, Shape::Scalar, false, "ep");
        add("c", 1, 1, 1, 0, Shape::Scalar, false, "cp");
        add("xp", -1, 1, 1, 1, Shape::Covector, true, "x");
        add("pp", -1, 1, 1, 1, Shape::Vector, true, "p");
        add("ep", -1, 1, 1, 0, Shape::Scalar, true, "e");
        add("cp", -2, 0, 0, 1, Shape::Scalar, true, "c");
        for n in 0..=cutoff {
            let ch = spinor_chirality(n);
            let par = ((n + 1) % 2) as u8;
            add(&th(n), n as i64, par, par, 0, Shape::Spinor(ch), false, &thp(n));
            add(&thp(n), -1 - n as i64, 1 - par, (1 - par + 1) % 2, 1, Shape::Spinor(ch.flip()), true, &th(n));
        }

        let mut b = UniverseBuilder::new();
        let mut jets = BTreeMap::new();
        let mut next = 0u16;
        for f in &fields {
            for i in 0..f.shape.len() {
                let base = component_name(&f.name, f.shape, i);
                let mut ids = Vec::new();
                for k in 0..=MAX_JET {
                    let name = if k == 0 { base.clone() } else { format!("{base}_t{k}") };
                    let kind = if f.parity == 1 { Kind::OddCoord } else { Kind::EvenCoord };
                    ids.push(next);
                    next += 1;
                    b.push(&name, f.parity, f.ghost as i32, kind, false);
                }
                jets.insert((f.name.clone(), i), ids);
            }
        }
        b.param("st").param("pi");
        b.alg_const("ct", "1 - st^2", false);
        let norm: Vec<String> = (1..=8).map(|a| format!("p{a}^2")).collect();
        b.alg_const("pstar", &norm.join(" + "), true);
        b.alg_const("rp", "1/2*p0 - 1/2*p9", true);
        b.alg_const("rm", "1/2*p0 + 1/2*p9", true);
        b.alg_const("rt", "1/2*p0 - 1/2*p9 + st^2*p9 + ct*st*pstar", true);
        for i in 1..=16 {
            b.push(&format!("eps{i}"), 0, 1, Kind::Param, false);
        }
        for mu in 0..10 {
            for nu in mu + 1..10 {
                b.push(&format!("lor{mu}_{nu}"), 1, 1, Kind::OddConst, false);
            }
        }
        FieldRegistry { cutoff, fields, u: b.build().expect("static universe"), jets }
    }

    pub fn field(&self, name: &str) -> Option<&FieldSpec> {
        self.fields.iter().find(|f| f.name == name)
    }

    pub fn jet(&self, field: &str, comp: usize, order: usize) -> Result<u16, ParticleError> {
        let ids = self.jets.get(&(field.to_string(), comp)).ok_or_else(|| ParticleError::Registry(format!("no field {field}[{comp}]")))?;
        ids.get(order).copied().ok_or(ParticleError::JetOrder(order))
    }

    pub fn var(&self, field: &str, comp: usize, order: usize) -> Poly {
        Poly::gen(&self.u, self.jet(field, comp, order).expect("registered jet"))
    }

    /// Components of a field at jet order `k`; spinors are placed in the
    /// 32-dimensional `S₊ ⊕ S₋` according to their chirality.
    pub fn vector(&self, field: &str, k: usize) -> Vec<Poly> {
        let f = self.field(field).expect("registered field");
        let comps: Vec<Poly> = (0..f.shape.len()).map(|i| self.var(field, i, k)).collect();
        match f.shape {
            Shape::Spinor(ch) => {
                let mut v = vec![Poly::zero(&self.u); 32];
                let o = if ch == Chirality::Plus { 0 } else { 16 };
                v[o..o + 16].clone_from_slice(&comps);
                v
            }
            _ => comps,
        }
    }

    pub fn param(&self, name: &str) -> Poly {
        Poly::var(&self.u, name)
    }

    /// Table checks: every field has exactly one partner, which lists it back;
    /// ghost numbers add to `-1`, component parities and form degrees to `1`.
    pub fn check_pairing(&self) -> Result<(), ParticleError> {
        let bad = |m: String| Err(ParticleError::Registry(m));
        for f in &self.fields {
            let Some(g) = self.field(&f.partner) else { return bad(format!("{} has no partner", f.name)) };
            if g.partner != f.name || g.antifield == f.antifield {
                return bad(format!("{} / {} is not an antifield pair", f.name, g.name));
            }
            if f.ghost + g.ghost != -1 {
                return bad(format!("ghosts of {} and {} do not add to -1", f.name, g.name));
            }
            if (f.parity + g.parity) % 2 != 1 || f.form_degree + g.form_degree != 1 {
                return bad(format!("parity or form degree of {} / {}", f.name, g.name));
            }
            if f.shape.len() != g.shape.len() {
                return bad(format!("{} and {} have different sizes", f.name, g.name));
            }
            if let (Shape::Spinor(a), Shape::Spinor(b)) = (f.shape, g.shape) {
                if a == b {
                    return bad(format!("{} and {} have equal chirality", f.name, g.name));
                }
            }
            let expected_printed = if matches!(f.shape, Shape::Spinor(_)) && f.antifield { (f.parity + f.form_degree) % 2 } else { f.parity };
            if f.printed_parity != expected_printed {
                return bad(format!("printed parity of {}", f.name));
            }
        }
        Ok(())
    }
}

fn component_name(field: &str, shape: Shape, i: usize) -> String {
    match shape {
        Shape::Scalar => field.to_string(),
        Shape::Vector | Shape::Covector => format!("{field}{i}"),
        Shape::Spinor(_) => format!("{field}_{}", i + 1),
    }
}
