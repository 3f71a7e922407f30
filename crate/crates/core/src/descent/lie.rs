use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{CechModel, DescentError, DescentSpace, FamilySet, TraceReport, TwCochain};
use crate::superpoly::{derivation, Poly};
use crate::Q;

/// Finite-dimensional Lie superalgebra with basis `ξ_a` and `[ξ_a, ξ_b] = C^c_{ab} ξ_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    pub parities: Vec<u8>,
    /// `(a, b, c) -> C^c_{ab}`.
    pub structure: BTreeMap<(usize, usize, usize), Q>,
}

fn sign(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

impl LieSuperAlgebra {
    /// Validates parity, graded antisymmetry and the graded Jacobi identity.
    pub fn new(parities: Vec<u8>, entries: &[(usize, usize, usize, Q)]) -> Result<Self, DescentError> {
        let n = parities.len();
        let mut structure = BTreeMap::new();
        for (a, b, c, v) in entries {
            if *a >= n || *b >= n || *c >= n {
                return Err(DescentError::BadStructure(format!("index out of range in C^{c}_{{{a}{b}}}")));
            }
            if !v.is_zero() {
                structure.insert((*a, *b, *c), v.clone());
            }
        }
        let g = LieSuperAlgebra { parities, structure };
        g.validate()?;
        Ok(g)
    }

    pub fn abelian(parities: Vec<u8>) -> Self {
        LieSuperAlgebra { parities, structure: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    fn c(&self, a: usize, b: usize, c: usize) -> Q {
        self.structure.get(&(a, b, c)).cloned().unwrap_or_else(Q::zero)
    }

    /// `[ξ_a, v]` for a coordinate vector `v`.
    fn ad(&self, a: usize, v: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for (b, vb) in v.iter().enumerate() {
            if vb.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o += vb * self.c(a, b, c);
            }
        }
        out
    }

    fn basis(&self, a: usize) -> Vec<Q> {
        (0..self.dim()).map(|b| if a == b { Q::one() } else { Q::zero() }).collect()
    }

    fn validate(&self) -> Result<(), DescentError> {
        let n = self.dim();
        let p = &self.parities;
        for (&(a, b, c), v) in &self.structure {
            if (p[a] + p[b]) % 2 != p[c] {
                return Err(DescentError::BadStructure(format!("C^{c}_{{{a}{b}}} = {v} breaks parity")));
            }
            let swapped = self.c(b, a, c);
            if swapped != -sign(p[a] & p[b] == 1) * v {
                return Err(DescentError::BadStructure(format!("C^{c}_{{{a}{b}}} not graded antisymmetric")));
            }
        }
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.ad(a, &self.ad(b, &self.basis(c)));
                    let ab = self.ad(a, &self.basis(b));
                    let mut rhs = vec![Q::zero(); n];
                    for (d, coef) in ab.iter().enumerate() {
                        if coef.is_zero() {
                            continue;
                        }
                        for (e, r) in rhs.iter_mut().enumerate() {
                            *r += coef * self.c(d, c, e);
                        }
                    }
                    let s = sign(p[a] & p[b] == 1);
                    for (r, x) in rhs.iter_mut().zip(self.ad(b, &self.ad(a, &self.basis(c)))) {
                        *r += &s * x;
                    }
                    if lhs != rhs {
                        return Err(DescentError::BadStructure(format!("Jacobi fails on ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `δ_g ε^a = ½ Σ_{b,c} (-1)^{(|ξ_b|+1)|ξ_c|} C^a_{bc} ε^b ε^c`.
    pub fn differential_of_generator(&self, space: &DescentSpace, a: usize) -> Poly {
        let u = space.universe();
        let half = Q::new(1.into(), 2.into());
        let mut out = Poly::zero(u);
        for (&(b, c, d), v) in &self.structure {
            if d != a {
                continue;
            }
            let s = sign((self.parities[b] + 1) * self.parities[c] % 2 == 1);
            let e = &Poly::gen(u, space.eps[b]) * &Poly::gen(u, space.eps[c]);
            out += &e.scale(&(&half * &s * v));
        }
        out
    }

    /// `δ_g` extended to everything as an odd derivation acting on the `ε^a`.
    pub fn cochain_differential(&self, space: &DescentSpace, f: &Poly) -> Poly {
        let images: Vec<(u16, Poly)> = (0..self.dim()).map(|a| (space.eps[a], self.differential_of_generator(space, a))).collect();
        derivation(f, &images)
    }
}

/// `ρ: g -> O(M)[-1]`, one function per basis vector.
#[derive(Clone, Debug)]
pub struct MomentMap {
    pub rho: Vec<Poly>,
}

impl MomentMap {
    pub fn new(g: &LieSuperAlgebra, rho: Vec<Poly>) -> Result<Self, DescentError> {
        if rho.len() != g.dim() {
            return Err(DescentError::BadStructure(format!("{} moment functions for dimension {}", rho.len(), g.dim())));
        }
        for (a, r) in rho.iter().enumerate() {
            if !r.is_empty() && r.parity() != Some((g.parities[a] + 1) % 2) {
                return Err(DescentError::BadStructure(format!("rho({a}) has parity {:?}, expected {}", r.parity(), (g.parities[a] + 1) % 2)));
            }
        }
        Ok(MomentMap { rho })
    }

    /// `μ = Σ_a ρ(ξ_a) ε^a`.
    pub fn mu(&self, space: &DescentSpace) -> Poly {
        let u = space.universe();
        let mut out = Poly::zero(u);
        for (a, r) in self.rho.iter().enumerate() {
            out += &(r * &Poly::gen(u, space.eps[a]));
        }
        out
    }

    /// `(ρ_a, ρ_b) - Σ_c C^c_{ab} ρ_c` for every pair.
    pub fn morphism_residuals(&self, space: &DescentSpace, g: &LieSuperAlgebra) -> Vec<((usize, usize), Poly)> {
        let mut out = Vec::new();
        for a in 0..g.dim() {
            for b in 0..g.dim() {
                let mut r = space.chart.antibracket(&self.rho[a], &self.rho[b]);
                for c in 0..g.dim() {
                    let v = g.c(a, b, c);
                    if !v.is_zero() {
                        r -= &self.rho[c].scale(&v);
                    }
                }
                out.push(((a, b), r));
            }
        }
        out
    }

    /// `δ_g μ + ½(μ, μ)`.
    pub fn mc_residual(&self, space: &DescentSpace, g: &LieSuperAlgebra) -> Poly {
        let mu = self.mu(space);
        let half = Q::new(1.into(), 2.into());
        &g.cochain_differential(space, &mu) + &space.chart.antibracket(&mu, &mu).scale(&half)
    }

    /// `e^{μ/ħ} = 1 + μ/ħ`, valid only when `μ² = 0`.
    pub fn exp_mu(&self, space: &DescentSpace) -> Result<Poly, DescentError> {
        let mu = self.mu(space);
        let sq = &mu * &mu;
        if !sq.is_empty() {
            return Err(DescentError::MuSquare(sq.to_text()));
        }
        Ok(&Poly::one(space.universe()) + &(&mu * &space.hbar_pow(-1)))
    }

    /// `(δ_g + H_μ + ħΔ) σ`.
    pub fn twisted(&self, space: &DescentSpace, g: &LieSuperAlgebra, s: &Poly) -> Poly {
        let mut out = g.cochain_differential(space, s);
        out += &space.chart.hamlift(&self.mu(space), s);
        out += &(&space.hbar() * &space.chart.delta(s));
        out
    }

    /// `e^{μ/ħ}(δ_g + H_μ + ħΔ)σ - (δ_g + ħΔ)(e^{μ/ħ}σ)`.
    pub fn conjugation_residual(&self, space: &DescentSpace, g: &LieSuperAlgebra, s: &Poly) -> Result<Poly, DescentError> {
        let e = self.exp_mu(space)?;
        let lhs = &e * &self.twisted(space, g, s);
        let es = &e * s;
        let rhs = &g.cochain_differential(space, &es) + &(&space.hbar() * &space.chart.delta(&es));
        Ok(&lhs - &rhs)
    }
}

impl CechModel {
    /// `Z_g(σ)`: the trace with `Φ` applied to `e^{μ/ħ}σ`.
    pub fn trace_equivariant(&self, fams: &FamilySet, sigma: &TwCochain, rho: &MomentMap) -> Result<TraceReport, DescentError> {
        let e = rho.exp_mu(&self.space)?;
        self.trace(fams, &sigma.map(|p| &e * p))
    }

    /// `(d + δ_g + H_μ + δ + ħΔ)σ`.
    pub fn d_equivariant(&self, g: &LieSuperAlgebra, rho: &MomentMap, s: &Poly) -> Poly {
        let mut out = rho.twisted(&self.space, g, s);
        out += &self.space.aux.derham(s);
        out += &self.space.simp.derham(s);
        out
    }

    /// `Z_g((d + δ_g + H_μ + δ + ħΔ)σ) - (d + δ_g) Z_g(σ)`. The relative sign
    /// is `-` because fibre and simplex integrals are taken from the left,
    /// so `d` and `δ_g` pass them without a sign.
    pub fn equivariant_closedness(
        &self,
        fams: &FamilySet,
        sigma: &TwCochain,
        g: &LieSuperAlgebra,
        rho: &MomentMap,
    ) -> Result<Poly, DescentError> {
        let dz = self.trace_equivariant(fams, &sigma.map(|p| self.d_equivariant(g, rho, p)), rho)?.value;
        let z = self.trace_equivariant(fams, sigma, rho)?.value;
        let zd = &self.space.aux.derham(&z) + &g.cochain_differential(&self.space, &z);
        Ok(&dz - &zd)
    }
}
