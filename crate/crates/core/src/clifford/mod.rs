//! Real Majorana-Weyl spinors of `R^{1,9}` with exact integer γ-matrices.
//!
//! `S = S₊ ⊕ S₋`, each 16-dimensional, and
//! `γ^μ = [[0, σ^μ], [σ̄^μ, 0]]` so that `σ^μ: S₋ → S₊`. The metric is
//! `η = diag(-1, 1, …, 1)` and `γ^μγ^ν + γ^νγ^μ = 2η^{μν}`.
//!
//! With this metric, `cl(m)cl(n) + cl(n)cl(m) = 2η(m, n)`, so the light-cone
//! pair `m = ½(E⁰+E⁹)`, `n = ½(E⁰-E⁹)` has `η(m, n) = -½`. The light-cone
//! formulas below use the pairing [`lc`] `= -η`, for which `(m, n) = ½`,
//! `(p, m₊) > 0` on `{p_0 > p_9}` and the projector onto `ker cl(m)` is
//! `cl(m)cl(n)` up to that sign.

mod flow;
mod matrix;
#[cfg(test)]
mod tests;

use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::superpoly::{AlgebraError, Poly, Universe, UniverseBuilder};
use crate::Q;

pub use flow::{FlowRing, LcFlow};
pub use matrix::{PMat, QMat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("representation check failed: {0}")]
    Relation(String),
    #[error("light-cone preconditions violated: {0}")]
    Pairing(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub const DIM: usize = 10;

pub fn eta(mu: usize, nu: usize) -> i64 {
    match (mu, nu) {
        (0, 0) => -1,
        _ if mu == nu => 1,
        _ => 0,
    }
}

fn two_by_two(c: char) -> QMat {
    let v: [i64; 4] = match c {
        '1' => [1, 0, 0, 1],
        'x' => [0, 1, 1, 0],
        'z' => [1, 0, 0, -1],
        'e' => [0, 1, -1, 0],
        _ => unreachable!(),
    };
    QMat::from_ints(2, 2, &v)
}

fn kron_word(w: &str) -> QMat {
    w.chars().map(two_by_two).reduce(|a, b| a.kron(&b)).unwrap()
}

/// Seven antisymmetric anticommuting 8×8 matrices squaring to `-1`.
const OCTONION_WORDS: [&str; 7] = ["11e", "1ex", "xez", "zez", "e1z", "exx", "ezx"];

#[derive(Clone, Debug)]
pub struct SpinorRep {
    pub sigma: Vec<QMat>,
    pub sigma_bar: Vec<QMat>,
    /// `T(α, β) = αᵀ T β` for `α ∈ S₊`, `β ∈ S₋`.
    pub t: QMat,
    gamma: Vec<QMat>,
    t_full: QMat,
}

impl SpinorRep {
    /// Builds the representation and verifies every relation it is used for.
    pub fn build() -> Result<Self, CliffordError> {
        let i8m = QMat::identity(8);
        let z8 = QMat::zeros(8, 8);
        let mut euclid: Vec<QMat> = OCTONION_WORDS
            .iter()
            .map(|w| {
                let e = kron_word(w);
                QMat::blocks(&z8, &e, &e.scale(&-Q::one()), &z8)
            })
            .collect();
        euclid.push(QMat::blocks(&z8, &i8m, &i8m, &z8));
        euclid.push(QMat::blocks(&i8m, &z8, &z8, &i8m.scale(&-Q::one())));
        let i16 = QMat::identity(16);
        let mut sigma = vec![i16.clone()];
        sigma.extend(euclid.iter().cloned());
        let mut sigma_bar = vec![i16.scale(&-Q::one())];
        sigma_bar.extend(euclid);
        let z16 = QMat::zeros(16, 16);
        let gamma = (0..DIM).map(|m| QMat::blocks(&z16, &sigma[m], &sigma_bar[m], &z16)).collect();
        let t = i16;
        let t_full = QMat::blocks(&z16, &t, &t.transpose(), &z16);
        let rep = SpinorRep { sigma, sigma_bar, t, gamma, t_full };
        rep.verify()?;
        Ok(rep)
    }

    fn verify(&self) -> Result<(), CliffordError> {
        let id = QMat::identity(16);
        for mu in 0..DIM {
            for nu in 0..DIM {
                let two_eta = id.scale(&Q::from_integer((2 * eta(mu, nu)).into()));
                let a = self.sigma[mu].mul(&self.sigma_bar[nu]).add(&self.sigma[nu].mul(&self.sigma_bar[mu]));
                let b = self.sigma_bar[mu].mul(&self.sigma[nu]).add(&self.sigma_bar[nu].mul(&self.sigma[mu]));
                if a != two_eta || b != two_eta {
                    return Err(CliffordError::Relation(format!("Clifford relation fails for ({mu},{nu})")));
                }
            }
        }
        let tf = &self.t_full;
        for mu in 0..DIM {
            let g = &self.gamma[mu];
            if g.transpose().mul(tf) != tf.mul(g) {
                return Err(CliffordError::Relation(format!("T(γ^{mu}α, β) ≠ T(α, γ^{mu}β)")));
            }
            for nu in 0..DIM {
                let g2 = self.gamma2(mu, nu);
                if !g2.transpose().mul(tf).add(&tf.mul(&g2)).is_zero() {
                    return Err(CliffordError::Relation(format!("γ^{{{mu}{nu}}} is not T-antisymmetric")));
                }
            }
        }
        if self.t.rank() != 16 {
            return Err(CliffordError::Relation("T is degenerate".into()));
        }
        Ok(())
    }

    pub fn gamma(&self, mu: usize) -> &QMat {
        &self.gamma[mu]
    }

    /// `γ^{μν} = ½(γ^μγ^ν - γ^νγ^μ)`.
    pub fn gamma2(&self, mu: usize, nu: usize) -> QMat {
        let (a, b) = (&self.gamma[mu], &self.gamma[nu]);
        a.mul(b).sub(&b.mul(a)).scale(&Q::new(1.into(), 2.into()))
    }

    /// The pairing on all of `S`, symmetric, zero on `S₊×S₊` and `S₋×S₋`.
    pub fn t_full(&self) -> &QMat {
        &self.t_full
    }

    /// `cl(v) = v_μγ^μ` for a constant covector.
    pub fn cl_q(&self, v: &[Q]) -> QMat {
        let mut out = QMat::zeros(32, 32);
        for (mu, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.gamma[mu].scale(c));
            }
        }
        out
    }

    /// Golden-file text: `σ^μ` and `σ̄^μ` as integer grids.
    pub fn golden_text(&self) -> String {
        let mut s = String::new();
        for (name, mats) in [("sigma", &self.sigma), ("sigma_bar", &self.sigma_bar)] {
            for (mu, m) in mats.iter().enumerate() {
                s.push_str(&format!("{name} {mu}\n"));
                for row in m.to_int_rows().expect("integral") {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                    s.push_str(&cells.join(" "));
                    s.push('\n');
                }
            }
        }
        s.push_str("T\n");
        for row in self.t.to_int_rows().expect("integral") {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

/// `v_μ`, `μ = 0..9`, with polynomial components.
#[derive(Clone, Debug, PartialEq)]
pub struct MinkowskiVector {
    pub v: Vec<Poly>,
}

impl MinkowskiVector {
    pub fn new(v: Vec<Poly>) -> Self {
        assert_eq!(v.len(), DIM);
        MinkowskiVector { v }
    }

    pub fn constant(u: &Arc<Universe>, v: &[Q]) -> Self {
        Self::new(v.iter().map(|c| Poly::constant(u, c.clone())).collect())
    }

    /// `½(E⁰ + sign·E⁹)`: `m₊` for `sign = 1`, `m₋` for `sign = -1`.
    pub fn light_cone(u: &Arc<Universe>, sign: i64) -> Self {
        Self::constant(u, &light_cone_q(sign))
    }

    /// `η^{μν} u_μ v_ν`.
    pub fn dot(&self, o: &MinkowskiVector) -> Poly {
        let mut out = Poly::zero(self.v[0].universe());
        for mu in 0..DIM {
            let p = &self.v[mu] * &o.v[mu];
            if mu == 0 {
                out -= &p;
            } else {
                out += &p;
            }
        }
        out
    }

    pub fn cl(&self, rep: &SpinorRep) -> PMat {
        let u = self.v[0].universe().clone();
        let terms: Vec<(Poly, &QMat)> = self.v.iter().cloned().zip(rep.gamma.iter()).collect();
        PMat::combination(&u, &terms)
    }
}

pub fn light_cone_q(sign: i64) -> Vec<Q> {
    let half = Q::new(1.into(), 2.into());
    let mut v = vec![Q::zero(); DIM];
    v[0] = half.clone();
    v[9] = half * Q::from_integer(sign.into());
    v
}

/// The light-cone pairing `(u, v) = -η(u, v)`.
pub fn lc(a: &MinkowskiVector, b: &MinkowskiVector) -> Poly {
    -&a.dot(b)
}

fn lc_q(a: &[Q], b: &[Q]) -> Q {
    let mut s = Q::zero();
    for mu in 0..DIM {
        s += Q::from_integer((-eta(mu, mu)).into()) * &a[mu] * &b[mu];
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn flip(self) -> Self {
        match self {
            Chirality::Plus => Chirality::Minus,
            Chirality::Minus => Chirality::Plus,
        }
    }

    fn offset(self) -> usize {
        match self {
            Chirality::Plus => 0,
            Chirality::Minus => 16,
        }
    }
}

/// Sixteen components of a chiral spinor.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorVector {
    pub chirality: Chirality,
    pub comps: Vec<Poly>,
}

impl SpinorVector {
    /// Components named `{prefix}1..{prefix}16`, looked up in the universe.
    pub fn symbols(u: &Arc<Universe>, chirality: Chirality, prefix: &str) -> Self {
        SpinorVector { chirality, comps: (1..=16).map(|i| Poly::var(u, &format!("{prefix}{i}"))).collect() }
    }

    pub fn full(&self) -> Vec<Poly> {
        let u = self.comps[0].universe();
        let mut v = vec![Poly::zero(u); 32];
        let o = self.chirality.offset();
        v[o..o + 16].clone_from_slice(&self.comps);
        v
    }

    pub fn from_full(chirality: Chirality, v: &[Poly]) -> Self {
        let o = chirality.offset();
        debug_assert!(v.iter().enumerate().all(|(i, p)| (o..o + 16).contains(&i) || p.is_zero()));
        SpinorVector { chirality, comps: v[o..o + 16].to_vec() }
    }

    pub fn apply_q(&self, m: &QMat) -> Vec<Poly> {
        m.apply(&self.full())
    }
}

/// `cl(v)ψ = v_μγ^μψ`, flipping chirality.
pub fn cl(rep: &SpinorRep, v: &MinkowskiVector, psi: &SpinorVector) -> SpinorVector {
    SpinorVector::from_full(psi.chirality.flip(), &v.cl(rep).apply(&psi.full()))
}

/// `T(α, β)`, zero unless the chiralities differ.
pub fn pair_t(rep: &SpinorRep, a: &[Poly], b: &[Poly]) -> Poly {
    rep.t_full.bilinear(a, b)
}

/// `T^μ(α, β) = T(γ^μα, β)`.
pub fn pair_t1(rep: &SpinorRep, mu: usize, a: &[Poly], b: &[Poly]) -> Poly {
    pair_t(rep, &rep.gamma[mu].apply(a), b)
}

/// `T^{μν}(α, β) = T(γ^{μν}α, β)`.
pub fn pair_t2(rep: &SpinorRep, mu: usize, nu: usize, a: &[Poly], b: &[Poly]) -> Poly {
    pair_t(rep, &rep.gamma2(mu, nu).apply(a), b)
}

/// Projector onto `ker cl(m)` along `ker cl(n)`: `-cl(m)cl(n)` for the
/// Clifford relation `{cl(m), cl(n)} = 2η(m, n) = -1`.
pub fn lightcone_projector(rep: &SpinorRep, m: &[Q], n: &[Q]) -> Result<QMat, CliffordError> {
    let half = Q::new(1.into(), 2.into());
    if !lc_q(m, m).is_zero() || !lc_q(n, n).is_zero() {
        return Err(CliffordError::Pairing("m and n must be light-like".into()));
    }
    if lc_q(m, n) != half {
        return Err(CliffordError::Pairing(format!("(m, n) = {}, expected 1/2", lc_q(m, n))));
    }
    Ok(rep.cl_q(m).mul(&rep.cl_q(n)).scale(&-Q::one()))
}

/// Universe for the light-cone lemma: `p0..p9` and two odd 16-vectors per chirality.
pub fn lemma_universe() -> Arc<Universe> {
    let mut b = UniverseBuilder::new();
    for mu in 0..DIM {
        b.param(&format!("p{mu}"));
    }
    for pre in ["chi", "psi"] {
        for i in 1..=16 {
            b.odd_const(&format!("{pre}{i}"));
        }
    }
    b.build().expect("static universe")
}

/// `p_μT^μ(θ, θ') - 2(p, m) n_ν T^ν(θ, θ')` for `θ = Pχ`, `θ' = Pψ` in
/// `ker cl(m)` of the given chiralities, with `m = m₊`, `n = m₋`.
///
/// `T^μ` pairs spinors of equal chirality, so only equal chiralities give a
/// nontrivial identity.
pub fn lemma_lightcone_residual(rep: &SpinorRep, u: &Arc<Universe>, p: &MinkowskiVector, ch: (Chirality, Chirality)) -> Poly {
    let m = light_cone_q(1);
    let n = light_cone_q(-1);
    let proj = lightcone_projector(rep, &m, &n).expect("standard light-cone pair");
    let theta = SpinorVector::symbols(u, ch.0, "chi").apply_q(&proj);
    let theta2 = SpinorVector::symbols(u, ch.1, "psi").apply_q(&proj);
    let mut lhs = Poly::zero(u);
    let mut rhs = Poly::zero(u);
    for mu in 0..DIM {
        let t = pair_t1(rep, mu, &theta, &theta2);
        lhs += &(&p.v[mu] * &t);
        if !n[mu].is_zero() {
            rhs += &t.scale(&n[mu]);
        }
    }
    let pm = lc(p, &MinkowskiVector::constant(u, &m)).scale_int(2);
    &lhs - &(&pm * &rhs)
}

pub(crate) fn half() -> Q {
    Q::new(One::one(), 2.into())
}
