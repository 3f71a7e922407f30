use std::sync::Arc;

use num_traits::One;

use super::{DescentError, DescentSpace};
use crate::superpoly::Poly;
use crate::Q;

/// All index sequences `(α_0 … α_k)` over `n` labels, repeats included, in
/// lexicographic order.
pub fn sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..=k {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..n).map(move |a| {
                    let mut s = s.clone();
                    s.push(a);
                    s
                })
            })
            .collect();
    }
    out
}

/// A cover of the single chart by `pou.len()` labelled sets with a polynomial
/// partition of unity. If the universe has an auxiliary simplex the `φ_α` may
/// depend on its coordinates.
#[derive(Clone, Debug)]
pub struct CechModel {
    pub space: Arc<DescentSpace>,
    pub pou: Vec<Poly>,
    pub kmax: usize,
    dpou: Vec<Poly>,
}

impl CechModel {
    pub fn new(space: &Arc<DescentSpace>, pou: Vec<Poly>, kmax: usize) -> Result<Self, DescentError> {
        let mut r = Poly::one(space.universe()).scale(&-Q::one());
        for p in &pou {
            r += p;
        }
        if !r.is_empty() {
            return Err(DescentError::PouSum(r.to_text()));
        }
        let dpou = pou.iter().map(|p| space.aux.derham(p)).collect();
        Ok(CechModel { space: space.clone(), pou, kmax, dpou })
    }

    pub fn len(&self) -> usize {
        self.pou.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pou.is_empty()
    }

    pub fn is_parametrized(&self) -> bool {
        self.dpou.iter().any(|p| !p.is_empty())
    }

    pub fn sequences(&self, k: usize) -> Vec<Vec<usize>> {
        sequences(self.len(), k)
    }

    fn check(&self, seq: &[usize]) -> Result<(), DescentError> {
        match seq.iter().find(|&&a| a >= self.len()) {
            Some(&a) => Err(DescentError::UnknownIndex(a)),
            None => Ok(()),
        }
    }

    /// `H_α σ = [Δ, m(φ_α)] σ`.
    pub fn h(&self, a: usize, s: &Poly) -> Poly {
        self.space.chart.hamlift(&self.pou[a], s)
    }

    /// `(m(dφ_α) + ħH_α) σ`; reduces to `ħH_α σ` for a constant partition.
    pub fn g(&self, a: usize, s: &Poly) -> Poly {
        let mut out = &self.space.hbar() * &self.h(a, s);
        if !self.dpou[a].is_empty() {
            out += &(&self.dpou[a] * s);
        }
        out
    }

    /// `Φ_{α_0…α_k} σ = (1/(k+1)) Σ_i (-1)^i G_{α_0}…G_{α_{i-1}} m(φ_{α_i}) G_{α_{i+1}}…G_{α_k} σ`
    /// with `G = m(dφ) + ħH`. Without an auxiliary simplex this is the
    /// `ħ^k/(k+1)` form with plain `H`'s.
    pub fn phi(&self, seq: &[usize], s: &Poly) -> Result<Poly, DescentError> {
        self.check(seq)?;
        let k = seq.len() - 1;
        // suffix[j] = G_{α_j} … G_{α_k} σ
        let mut suffix = vec![s.clone(); k + 2];
        for j in (0..=k).rev() {
            suffix[j] = self.g(seq[j], &suffix[j + 1]);
        }
        let mut out = Poly::zero(self.space.universe());
        for i in 0..=k {
            let mut v = &self.pou[seq[i]] * &suffix[i + 1];
            for j in (0..i).rev() {
                if v.is_empty() {
                    break;
                }
                v = self.g(seq[j], &v);
            }
            if i % 2 == 0 {
                out += &v;
            } else {
                out -= &v;
            }
        }
        Ok(out.scale(&Q::new(1.into(), (k as i64 + 1).into())))
    }

    /// `D = d + δ + ħΔ`, with `d` absent when there is no auxiliary simplex.
    pub fn d_total(&self, s: &Poly) -> Poly {
        self.space.d_total_aux(s)
    }

    /// `[D, Φ_{α_0…α_k}]σ - Σ_{i=0}^{k+1} (-1)^i Σ_α Φ_{α_0…α_{i-1} α α_i…α_k} σ`.
    pub fn lemma_eta_residual(&self, seq: &[usize], s: &Poly) -> Result<Poly, DescentError> {
        self.check(seq)?;
        let k = seq.len() - 1;
        let mut r = self.d_total(&self.phi(seq, s)?);
        let back = self.phi(seq, &self.d_total(s))?;
        if k % 2 == 0 {
            r -= &back;
        } else {
            r += &back;
        }
        for i in 0..=k + 1 {
            for a in 0..self.len() {
                let mut ins = seq.to_vec();
                ins.insert(i, a);
                let v = self.phi(&ins, s)?;
                if i % 2 == 0 {
                    r -= &v;
                } else {
                    r += &v;
                }
            }
        }
        Ok(r)
    }

    /// `Σ_α H_α σ`, zero because `Σ_α φ_α = 1`.
    pub fn sum_h(&self, s: &Poly) -> Poly {
        let mut out = Poly::zero(self.space.universe());
        for a in 0..self.len() {
            out += &self.h(a, s);
        }
        out
    }
}
