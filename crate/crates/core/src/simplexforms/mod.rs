//! Polynomial differential forms on simplices.
//!
//! A form on `Δ^k` is a polynomial in `t1..tk` and the odd `dt1..dtk`, with
//! `t0 = 1 - Σ t_i` eliminated. Any other generator of the universe is a
//! coefficient. Top-degree forms are written `dt1 ... dtk · c`.


use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::superpoly::{berezin, partial_formal, substitute, Assignment, Kind, Mono, Poly, Universe, UniverseBuilder};
use crate::Q;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplexError {
    #[error("map {0:?} is not order-preserving")]
    NotMonotone(Vec<usize>),
    #[error("map image {0} outside the target simplex")]
    OutOfRange(usize),
    #[error("simplex dimension {0} exceeds the declared maximum {1}")]
    TooLarge(usize, usize),
}

/// The coordinates `t_i`, `dt_i` for simplices up to dimension `kmax`.
#[derive(Clone, Debug)]
pub struct Simplices {
    u: Arc<Universe>,
    t: Vec<u16>,
    dt: Vec<u16>,
}

/// Order-preserving map `[k] -> [l]`, stored as its list of images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub images: Vec<usize>,
    pub target: usize,
}

impl SimplicialMap {
    pub fn new(images: Vec<usize>, target: usize) -> Result<Self, SimplexError> {
        if images.windows(2).any(|w| w[0] > w[1]) {
            return Err(SimplexError::NotMonotone(images));
        }
        if let Some(&m) = images.iter().find(|&&m| m > target) {
            return Err(SimplexError::OutOfRange(m));
        }
        Ok(SimplicialMap { images, target })
    }

    /// Coface `d^i: [k-1] -> [k]`, skipping `i`.
    pub fn coface(k: usize, i: usize) -> Self {
        SimplicialMap { images: (0..=k).filter(|&j| j != i).collect(), target: k }
    }

    /// Codegeneracy `s^i: [k+1] -> [k]`, hitting `i` twice.
    pub fn codegeneracy(k: usize, i: usize) -> Self {
        SimplicialMap { images: (0..=k + 1).map(|j| if j <= i { j } else { j - 1 }).collect(), target: k }
    }

    pub fn source(&self) -> usize {
        self.images.len() - 1
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SimplicialMap) -> SimplicialMap {
        SimplicialMap { images: other.images.iter().map(|&j| self.images[j]).collect(), target: self.target }
    }
}

fn factorial(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, i| acc * Q::from_integer(i.into()))
}

impl Simplices {
    pub fn declare(b: &mut UniverseBuilder, kmax: usize) {
        Self::declare_named(b, "t", kmax);
    }

    /// Coordinates `{name}1..` and forms `d{name}1..`; a second family
    /// (e.g. `s`) serves as an auxiliary simplex.
    pub fn declare_named(b: &mut UniverseBuilder, name: &str, kmax: usize) {
        for i in 1..=kmax {
            b.push(&format!("{name}{i}"), 0, 0, Kind::SimplexCoord, false);
        }
        for i in 1..=kmax {
            b.push(&format!("d{name}{i}"), 1, 1, Kind::SimplexForm, false);
        }
    }

    pub fn find(u: &Arc<Universe>, kmax: usize) -> Self {
        Self::find_named(u, "t", kmax)
    }

    pub fn find_named(u: &Arc<Universe>, name: &str, kmax: usize) -> Self {
        Simplices {
            u: u.clone(),
            t: (1..=kmax).map(|i| u.idx(&format!("{name}{i}"))).collect(),
            dt: (1..=kmax).map(|i| u.idx(&format!("d{name}{i}"))).collect(),
        }
    }

    /// Universe with only simplex coordinates.
    pub fn standalone(kmax: usize) -> Self {
        let mut b = UniverseBuilder::new();
        Self::declare(&mut b, kmax);
        Self::find(&b.build().expect("simplex universe"), kmax)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.u
    }

    pub fn kmax(&self) -> usize {
        self.t.len()
    }

    pub fn t_gens(&self) -> &[u16] {
        &self.t
    }

    pub fn dt_gens(&self) -> &[u16] {
        &self.dt
    }

    /// Barycentric coordinate `t_i` on `Δ^k`; `t_0 = 1 - Σ t_j`.
    pub fn t(&self, k: usize, i: usize) -> Poly {
        if i == 0 {
            let mut p = Poly::one(&self.u);
            for j in 0..k {
                p -= &Poly::gen(&self.u, self.t[j]);
            }
            p
        } else {
            Poly::gen(&self.u, self.t[i - 1])
        }
    }

    pub fn dt(&self, k: usize, i: usize) -> Poly {
        if i == 0 {
            let mut p = Poly::zero(&self.u);
            for j in 0..k {
                p -= &Poly::gen(&self.u, self.dt[j]);
            }
            p
        } else {
            Poly::gen(&self.u, self.dt[i - 1])
        }
    }

    /// `δω = Σ dt_i ∂ω/∂t_i`, an odd derivation acting from the left.
    pub fn derham(&self, w: &Poly) -> Poly {
        let mut out = Poly::zero(&self.u);
        for (&t, &dt) in self.t.iter().zip(&self.dt) {
            let d = partial_formal(t, w);
            if !d.is_empty() {
                out += &(&Poly::gen(&self.u, dt) * &d);
            }
        }
        out
    }

    /// Pullback along the affine map `Δ^k -> Δ^l` induced by `mu`.
    pub fn pullback(&self, mu: &SimplicialMap, w: &Poly) -> Result<Poly, SimplexError> {
        let (k, l) = (mu.source(), mu.target);
        for d in [k, l] {
            if d > self.kmax() {
                return Err(SimplexError::TooLarge(d, self.kmax()));
            }
        }
        let mut asg = Assignment::new();
        for j in 1..=l {
            let mut s = Poly::zero(&self.u);
            let mut ds = Poly::zero(&self.u);
            for (i, &m) in mu.images.iter().enumerate() {
                if m == j {
                    s += &self.t(k, i);
                    ds += &self.dt(k, i);
                }
            }
            asg.insert(self.t[j - 1], s);
            asg.insert(self.dt[j - 1], ds);
        }
        Ok(substitute(w, &asg).expect("graded pullback"))
    }

    /// `∫_{Δ^k} ω`; only the top-degree part contributes, orientation `dt1...dtk`.
    pub fn integrate(&self, k: usize, w: &Poly) -> Poly {
        let coeff = berezin(w, &self.dt[..k]).expect("dt generators are odd and distinct");
        let tk = &self.t[..k];
        coeff.map_terms(|m, c| {
            // other dt's left over mean the form was not of top degree on Δ^k
            if m.factors().iter().any(|(g, _)| self.dt.contains(g)) {
                return None;
            }
            let mut sum = 0usize;
            let mut w = c.clone();
            let mut rest = Mono::one();
            for &(g, e) in m.factors() {
                if tk.contains(&g) {
                    let e = e as usize;
                    sum += e;
                    w *= factorial(e);
                } else {
                    rest.0.push((g, e));
                }
            }
            w /= factorial(sum + k);
            if w.is_zero() {
                None
            } else {
                Some((rest, w))
            }
        })
    }

    /// `∫_{Δ^k} δω - Σ_i (-1)^i ∫_{Δ^{k-1}} (d^i)^* ω`.
    pub fn stokes_residual(&self, k: usize, w: &Poly) -> Result<Poly, SimplexError> {
        let mut r = self.integrate(k, &self.derham(w));
        for i in 0..=k {
            let face = self.integrate(k - 1, &self.pullback(&SimplicialMap::coface(k, i), w)?);
            if i % 2 == 0 {
                r -= &face;
            } else {
                r += &face;
            }
        }
        Ok(r)
    }
}
