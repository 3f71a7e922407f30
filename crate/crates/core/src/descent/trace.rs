use std::collections::BTreeMap;

use super::phi::sequences;
use super::{compute_eta, CechModel, DescentError, DescentSpace, LagrangianFamily, TwCochain};
use crate::parallel::*;
use crate::simplexforms::SimplicialMap;
use crate::superpoly::{partial_formal, Poly};
use crate::Q;

/// One Lagrangian family with its `η` per index sequence.
#[derive(Clone, Debug)]
pub struct FamilySet {
    pub labels: usize,
    pub levels: usize,
    pub fams: BTreeMap<Vec<usize>, LagrangianFamily>,
}

impl FamilySet {
    /// `L_{α_0…α_k}` the graph of `ξ_a = Σ_i t_i ∂Ψ_{α_i}/∂x^a`: the straight
    /// interpolation between the gauge fermions of the vertices.
    pub fn barycentric(space: &DescentSpace, psis: &[Poly], levels: usize, x0: &[Q]) -> Result<Self, DescentError> {
        let xs = space.xs();
        let grads: Vec<Vec<Poly>> = psis.iter().map(|p| xs.iter().map(|&x| partial_formal(x, p)).collect()).collect();
        let mut fams = BTreeMap::new();
        for k in 0..=levels {
            for seq in sequences(psis.len(), k) {
                let xi = (0..xs.len())
                    .map(|a| {
                        let mut v = Poly::zero(space.universe());
                        for (i, &al) in seq.iter().enumerate() {
                            v += &(&space.simp.t(k, i) * &grads[al][a]);
                        }
                        v
                    })
                    .collect();
                let mut fam = LagrangianFamily::new(k, xi);
                fam.eta = Some(compute_eta(space, &fam, x0)?);
                fams.insert(seq, fam);
            }
        }
        Ok(FamilySet { labels: psis.len(), levels, fams })
    }

    pub fn get(&self, seq: &[usize]) -> Result<&LagrangianFamily, DescentError> {
        self.fams.get(seq).ok_or_else(|| DescentError::MissingFamily(seq.to_vec()))
    }

    /// Faces and degeneracies of the families are again families of the set,
    /// graphs and generating forms both.
    pub fn check_compatible(&self, space: &DescentSpace) -> Result<(), DescentError> {
        for l in 1..=self.levels {
            for beta in sequences(self.labels, l) {
                for i in 0..=l {
                    self.compare(space, &SimplicialMap::coface(l, i), &beta)?;
                }
            }
            for beta in sequences(self.labels, l - 1) {
                for i in 0..l {
                    self.compare(space, &SimplicialMap::codegeneracy(l - 1, i), &beta)?;
                }
            }
        }
        Ok(())
    }

    fn compare(&self, space: &DescentSpace, mu: &SimplicialMap, beta: &[usize]) -> Result<(), DescentError> {
        let fb = self.get(beta)?;
        let composed: Vec<usize> = mu.images.iter().map(|&j| beta[j]).collect();
        let fc = self.get(&composed)?;
        for (a, (x, y)) in fb.xi.iter().zip(&fc.xi).enumerate() {
            if &space.simp.pullback(mu, x)? != y {
                return Err(DescentError::Incompatible(format!("xi{} of {:?} along {:?}", a + 1, beta, mu.images)));
            }
        }
        if &space.simp.pullback(mu, fb.eta()?)? != fc.eta()? {
            return Err(DescentError::Incompatible(format!("eta of {:?} along {:?}", beta, mu.images)));
        }
        Ok(())
    }
}

/// Value of the glued trace with the contribution of each nerve level.
#[derive(Clone, Debug)]
pub struct TraceReport {
    pub value: Poly,
    pub levels: Vec<Poly>,
}

impl CechModel {
    /// `∫_{Δ^k} ∫_L e^{-η/ħ} ι^*(Φ_{α_0…α_k} σ_{α_0…α_k})` for one sequence.
    pub fn term(&self, fams: &FamilySet, sigma: &TwCochain, seq: &[usize]) -> Result<Poly, DescentError> {
        let k = seq.len() - 1;
        let fam = fams.get(seq)?;
        let s = self.phi(seq, sigma.component(seq)?)?;
        let inner = fam.integrate(&self.space, &s)?;
        Ok(self.space.simp.integrate(k, &inner))
    }

    /// `Z(σ) = Σ_{k ≤ K} (-1)^k Σ_{α_0…α_k} ∫_{Δ^k} ∫_L e^{-η/ħ} ι^*(Φσ)`, after
    /// checking compatibility of `σ` and the families.
    pub fn trace(&self, fams: &FamilySet, sigma: &TwCochain) -> Result<TraceReport, DescentError> {
        sigma.check_compatible(&self.space)?;
        fams.check_compatible(&self.space)?;
        self.trace_unchecked(fams, sigma)
    }

    pub fn trace_unchecked(&self, fams: &FamilySet, sigma: &TwCochain) -> Result<TraceReport, DescentError> {
        let mut levels = Vec::new();
        let mut value = Poly::zero(self.space.universe());
        for k in 0..=self.kmax {
            let seqs = self.sequences(k);
            let terms: Vec<Result<Poly, DescentError>> = seqs.par_iter().map(|s| self.term(fams, sigma, s)).collect();
            let mut lv = Poly::zero(self.space.universe());
            for t in terms {
                lv += &t?;
            }
            if k % 2 == 0 {
                value += &lv;
            } else {
                value -= &lv;
            }
            levels.push(lv);
        }
        Ok(TraceReport { value, levels })
    }

    /// The terms dropped by truncating at `K`: `Φ_β σ_β` and `Φ_β σ_{∂_i β}` for
    /// `β` at levels `K+1` and `K+2`. All of them must vanish identically.
    pub fn truncation_check(&self, sigma: &TwCochain) -> Result<(), DescentError> {
        for l in self.kmax + 1..=self.kmax + 2 {
            let seqs = self.sequences(l);
            let bad: Vec<Option<String>> = seqs
                .par_iter()
                .map(|beta| {
                    let mut srcs = vec![beta.clone()];
                    for i in 0..=l {
                        let mut f = beta.clone();
                        f.remove(i);
                        srcs.push(f);
                    }
                    for src in srcs {
                        let c = match sigma.component(&src) {
                            Ok(c) => c,
                            Err(e) => return Some(e.to_string()),
                        };
                        match self.phi(beta, c) {
                            Ok(v) if v.is_empty() => {}
                            Ok(v) => return Some(format!("Phi_{beta:?} sigma_{src:?} = {v}")),
                            Err(e) => return Some(e.to_string()),
                        }
                    }
                    None
                })
                .collect();
            if let Some(msg) = bad.into_iter().flatten().next() {
                return Err(DescentError::Truncation(msg));
            }
        }
        Ok(())
    }

    /// `dZ(σ)` on the auxiliary simplex for a cocycle `σ`: zero when the trace
    /// does not depend on the partition of unity.
    pub fn pou_independence_residual(&self, fams: &FamilySet, sigma: &TwCochain) -> Result<Poly, DescentError> {
        for (seq, c) in &sigma.components {
            if seq.len() > self.kmax + 2 {
                continue;
            }
            let r = self.d_total(c);
            if !r.is_empty() {
                return Err(DescentError::NotCocycle(format!("{seq:?}: {r}")));
            }
        }
        let z = self.trace(fams, sigma)?;
        Ok(self.space.aux.derham(&z.value))
    }
}
