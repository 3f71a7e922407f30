use num_traits::Zero;

use super::{DescentError, DescentSpace};
use crate::superpoly::{gaussian_moment, partial_formal, substitute, Assignment, Poly};
use crate::Q;

/// Graph `ξ_a = ξ_a(x, t)` of a family of Lagrangians over `Δ^k`, with
/// `x^a = x^a` (the base coordinates are not moved).
#[derive(Clone, Debug)]
pub struct LagrangianFamily {
    pub k: usize,
    pub xi: Vec<Poly>,
    pub eta: Option<Poly>,
}

impl LagrangianFamily {
    pub fn new(k: usize, xi: Vec<Poly>) -> Self {
        LagrangianFamily { k, xi, eta: None }
    }

    /// The family `ξ_a = ∂Ψ/∂x^a` of graphs of a generating function.
    pub fn from_generating(space: &DescentSpace, k: usize, psi: &Poly) -> Self {
        let xi = space.xs().iter().map(|&x| partial_formal(x, psi)).collect();
        Self::new(k, xi)
    }

    /// Constant family, the zero section for every `t`.
    pub fn zero_section(space: &DescentSpace, k: usize) -> Self {
        Self::new(k, vec![Poly::zero(space.universe()); space.config.n])
    }

    /// `ι^*`: restrict a half-form to the family.
    pub fn restrict(&self, space: &DescentSpace, s: &Poly) -> Poly {
        let mut asg = Assignment::new();
        for (xi, val) in space.xis().into_iter().zip(&self.xi) {
            asg.insert(xi, val.clone());
        }
        substitute(s, &asg).expect("odd values for odd fibre coordinates")
    }

    pub fn eta(&self) -> Result<&Poly, DescentError> {
        self.eta.as_ref().ok_or(DescentError::EtaMissing)
    }

    /// `e^{-η/ħ}`, a finite sum since `η` has form degree one on `Δ^k`.
    pub fn weight(&self, space: &DescentSpace) -> Result<Poly, DescentError> {
        let eta = self.eta()?;
        let u = space.universe();
        let a = eta * &space.hbar_pow(-1);
        let mut term = Poly::one(u);
        let mut out = Poly::one(u);
        for j in 1..=self.k as i64 {
            term = (&term * &a).scale(&Q::new((-1).into(), j.into()));
            if term.is_empty() {
                break;
            }
            out += &term;
        }
        Ok(out)
    }

    /// `∫_L e^{-η/ħ} ι^*σ` over the Gaussian-dressed base.
    pub fn integrate(&self, space: &DescentSpace, s: &Poly) -> Result<Poly, DescentError> {
        let w = self.weight(space)?;
        let r = &w * &self.restrict(space, s);
        Ok(gaussian_moment(&r, &space.xs())?)
    }
}

fn x_degree(space: &DescentSpace, m: &crate::superpoly::Mono) -> i64 {
    space.xs().iter().map(|&x| m.exp(x) as i64).sum()
}

/// Generating one-form `η = Σ dt_i η_i` with `∂η_i/∂x^a = ∂ξ_a/∂t_i` and
/// `δη = 0`: the radial homotopy in `x`, normalized to vanish at `x0`.
pub fn compute_eta(space: &DescentSpace, fam: &LagrangianFamily, x0: &[Q]) -> Result<Poly, DescentError> {
    let u = space.universe();
    let xs = space.xs();
    let k = fam.k;
    let ts = &space.simp.t_gens()[..k];
    let dts = &space.simp.dt_gens()[..k];
    let mut eta = Poly::zero(u);
    for i in 0..k {
        let g: Vec<Poly> = fam.xi.iter().map(|x| partial_formal(ts[i], x)).collect();
        for a in 0..xs.len() {
            for b in a + 1..xs.len() {
                let r = &partial_formal(xs[b], &g[a]) - &partial_formal(xs[a], &g[b]);
                if !r.is_empty() {
                    return Err(DescentError::NotClosed(format!(
                        "d/dx{} dxi{}/dt{} - d/dx{} dxi{}/dt{} = {}",
                        b + 1,
                        a + 1,
                        i + 1,
                        a + 1,
                        b + 1,
                        i + 1,
                        r
                    )));
                }
            }
        }
        let mut eta_i = Poly::zero(u);
        for (a, ga) in g.iter().enumerate() {
            let xa = Poly::gen(u, xs[a]);
            let radial = ga.map_terms(|m, c| {
                let d = x_degree(space, m);
                Some((m.clone(), c / Q::from_integer((d + 1).into())))
            });
            eta_i += &(&xa * &radial);
        }
        eta += &(&Poly::gen(u, dts[i]) * &eta_i);
    }
    let mut at = Assignment::new();
    for (a, &x) in xs.iter().enumerate() {
        at.insert(x, Poly::constant(u, x0.get(a).cloned().unwrap_or_else(Q::zero)));
    }
    eta -= &substitute(&eta, &at)?;
    check_eta(space, fam, &eta)?;
    Ok(eta)
}

/// Both defining equations of `η`, exactly.
pub fn check_eta(space: &DescentSpace, fam: &LagrangianFamily, eta: &Poly) -> Result<(), DescentError> {
    let xs = space.xs();
    for i in 0..fam.k {
        let eta_i = partial_formal(space.simp.dt_gens()[i], eta);
        for (a, &x) in xs.iter().enumerate() {
            let r = &partial_formal(x, &eta_i) - &partial_formal(space.simp.t_gens()[i], &fam.xi[a]);
            if !r.is_empty() {
                return Err(DescentError::EtaCheck(format!("dη_{}/dx{} residual {}", i + 1, a + 1, r)));
            }
        }
    }
    let d = space.simp.derham(eta);
    if !d.is_empty() {
        return Err(DescentError::EtaCheck(format!("δη = {d}")));
    }
    Ok(())
}

/// `δ∫_L e^{-η/ħ} ι^*σ - ∫_L e^{-η/ħ} ι^*(δ + ħΔ)σ`.
pub fn ms_residual(space: &DescentSpace, fam: &LagrangianFamily, s: &Poly) -> Result<Poly, DescentError> {
    let xs = space.xs();
    if s.terms().keys().any(|m| xs.iter().any(|&x| m.exp(x) < 0)) {
        return Err(DescentError::NotGaussian(s.to_text()));
    }
    let lhs = space.simp.derham(&fam.integrate(space, s)?);
    let rhs = fam.integrate(space, &space.d_total(s))?;
    Ok(&lhs - &rhs)
}
