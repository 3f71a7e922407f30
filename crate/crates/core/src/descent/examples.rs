//! Small models used by the tests and the verification suites.

use std::sync::Arc;

use num_traits::Zero;

use super::{CechModel, DescentSpace, LieSuperAlgebra, SpaceConfig, Template, TwCochain};
use crate::random::{random_poly, stream_n};
use crate::superpoly::Poly;
use crate::Q;

pub fn space(n: usize, kmax: usize, aux: usize) -> Arc<DescentSpace> {
    let mut c = SpaceConfig::new(n, kmax);
    c.aux = aux;
    DescentSpace::new(c)
}

pub fn lie_space(parities: Vec<u8>, n: usize, kmax: usize) -> Arc<DescentSpace> {
    let mut c = SpaceConfig::new(n, kmax);
    c.lie = parities;
    DescentSpace::new(c)
}

fn p(s: &DescentSpace, text: &str) -> Poly {
    s.parse(text).expect("example polynomial")
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

/// Half-form generators: base, fibre and two odd constants.
pub fn field_gens(s: &DescentSpace) -> Vec<u16> {
    let mut g = s.xs();
    g.extend(s.xis());
    g.extend(&s.lams[..2]);
    g
}

/// Random half-form, with simplex coordinates of `Δ^with_t` and ħ mixed in.
pub fn random_sigma(s: &DescentSpace, seed: u64, t: usize, with_t: usize, deg: usize) -> Poly {
    let mut gens = field_gens(s);
    gens.extend(&s.simp.t_gens()[..with_t]);
    gens.extend(&s.simp.dt_gens()[..with_t]);
    gens.push(s.universe().hbar().expect("hbar"));
    let mut rng = stream_n(seed, "sigma", t);
    random_poly(s.universe(), &mut rng, &gens, deg, 5, None)
}

pub fn two_set(s: &Arc<DescentSpace>, kmax: usize) -> CechModel {
    CechModel::new(s, vec![p(s, "1/2 + x1 - 1/3*x2^2"), p(s, "1/2 - x1 + 1/3*x2^2")], kmax).expect("two-set pou")
}

pub fn three_set(s: &Arc<DescentSpace>, kmax: usize) -> CechModel {
    CechModel::new(s, vec![p(s, "x1"), p(s, "x2^2 - 2*x1*x2"), p(s, "1 - x1 - x2^2 + 2*x1*x2")], kmax)
        .expect("three-set pou")
}

/// Partition of unity on the auxiliary interval: `s φ⁰ + (1 - s) φ¹`.
pub fn interpolated(s: &Arc<DescentSpace>, kmax: usize) -> CechModel {
    let a = p(s, "s1*(1/2 + x1 - x1*x2) + (1 - s1)*(1/3 - x2 + x1^2)");
    let b = &Poly::one(s.universe()) - &a;
    CechModel::new(s, vec![a, b], kmax).expect("interpolated pou")
}

pub fn random_tau(s: &Arc<DescentSpace>, labels: usize, levels: usize, seed: u64) -> TwCochain {
    let gens = field_gens(s);
    let templates = vec![
        Template::random(s, seed, "c0", 0, 0, gens.clone(), 3, 6),
        Template::constant(p(s, "xi1*xi2*x1 + lam1*xi2 + x2*xi1")),
        Template::random(s, seed, "c1", 1, 0, gens.clone(), 2, 2),
        Template::random(s, seed, "c2", 1, 1, gens.clone(), 2, 2),
        Template::random(s, seed, "c3", 0, 1, gens, 2, 2),
    ];
    TwCochain::from_templates(s, labels, levels, &templates)
}

/// Gauge fermions of two Lagrangians on a `2|2` chart.
pub fn psis(s: &DescentSpace) -> Vec<Poly> {
    vec![p(s, "lam1*x1*x2"), p(s, "lam2*x2 + lam3*x1^2")]
}

/// `[a, b] = b` on even generators.
pub fn two_dim() -> LieSuperAlgebra {
    LieSuperAlgebra::new(vec![0, 0], &[(0, 1, 1, Q::from_integer(1.into())), (1, 0, 1, Q::from_integer((-1).into()))])
        .expect("two-dimensional Lie algebra")
}
