use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::phi::sequences;
use super::{DescentError, DescentSpace};
use crate::random::{random_poly, stream};
use crate::simplexforms::SimplicialMap;
use crate::superpoly::Poly;

type Coeff = Arc<dyn Fn(&[usize], &[usize]) -> Poly + Send + Sync>;

/// Building block of compatible cochains:
/// `σ_{α_0…α_k} = Σ_{I ∈ [k]^a, J ∈ [k]^b} t_{I_1}…t_{I_a} dt_{J_1}…dt_{J_b} c(α_I, α_J)`.
///
/// Pulling back along `μ_*` reindexes `I, J` through `μ`, so the components
/// agree with the simplicial structure for every coefficient function `c`.
#[derive(Clone)]
pub struct Template {
    pub t_slots: usize,
    pub dt_slots: usize,
    pub coeff: Coeff,
}

impl fmt::Debug for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Template(t^{}, dt^{})", self.t_slots, self.dt_slots)
    }
}

impl Template {
    pub fn new(t_slots: usize, dt_slots: usize, coeff: impl Fn(&[usize], &[usize]) -> Poly + Send + Sync + 'static) -> Self {
        Template { t_slots, dt_slots, coeff: Arc::new(coeff) }
    }

    /// The same half-form on every component of level 0 and its pullbacks.
    pub fn constant(c: Poly) -> Self {
        Self::new(0, 0, move |_, _| c.clone())
    }

    /// Coefficients drawn from a stream keyed by the labels, in the given
    /// generators of the space.
    pub fn random(
        space: &Arc<DescentSpace>,
        seed: u64,
        label: &str,
        t_slots: usize,
        dt_slots: usize,
        gens: Vec<u16>,
        max_deg: usize,
        max_terms: usize,
    ) -> Self {
        let u = space.universe().clone();
        let label = label.to_string();
        Self::new(t_slots, dt_slots, move |i, j| {
            let mut rng = stream(seed, &format!("{label}/{i:?}/{j:?}"));
            random_poly(&u, &mut rng, &gens, max_deg, max_terms, None)
        })
    }

    pub fn component(&self, space: &DescentSpace, seq: &[usize]) -> Poly {
        let k = seq.len() - 1;
        let slots = self.t_slots + self.dt_slots;
        let u = space.universe();
        let mut out = Poly::zero(u);
        let total = (k + 1).pow(slots as u32);
        let mut idx = vec![0usize; slots];
        for _ in 0..total {
            let (ti, dti) = idx.split_at(self.t_slots);
            let mut distinct = true;
            for a in 0..dti.len() {
                for b in a + 1..dti.len() {
                    distinct &= dti[a] != dti[b];
                }
            }
            if distinct {
                let li: Vec<usize> = ti.iter().map(|&i| seq[i]).collect();
                let lj: Vec<usize> = dti.iter().map(|&i| seq[i]).collect();
                let c = (self.coeff)(&li, &lj);
                if !c.is_empty() {
                    let mut term = c;
                    for &j in dti.iter().rev() {
                        term = &space.simp.dt(k, j) * &term;
                    }
                    for &i in ti {
                        term = &space.simp.t(k, i) * &term;
                    }
                    out += &term;
                }
            }
            // next multi-index
            for d in idx.iter_mut() {
                *d += 1;
                if *d <= k {
                    break;
                }
                *d = 0;
            }
        }
        out
    }
}

/// Components `σ_{α_0…α_k} ∈ Ω^{1/2} ⊗ Ω_k` for every sequence up to a level.
#[derive(Clone, Debug)]
pub struct TwCochain {
    pub labels: usize,
    pub levels: usize,
    pub components: BTreeMap<Vec<usize>, Poly>,
}

impl TwCochain {
    pub fn from_templates(space: &DescentSpace, labels: usize, levels: usize, templates: &[Template]) -> Self {
        let mut components = BTreeMap::new();
        for k in 0..=levels {
            for seq in sequences(labels, k) {
                let mut c = Poly::zero(space.universe());
                for t in templates {
                    c += &t.component(space, &seq);
                }
                components.insert(seq, c);
            }
        }
        TwCochain { labels, levels, components }
    }

    pub fn component(&self, seq: &[usize]) -> Result<&Poly, DescentError> {
        self.components.get(seq).ok_or_else(|| DescentError::MissingComponent(seq.to_vec()))
    }

    /// Applies `f` to every component.
    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        TwCochain {
            labels: self.labels,
            levels: self.levels,
            components: self.components.iter().map(|(s, p)| (s.clone(), f(p))).collect(),
        }
    }

    pub fn add(&self, other: &TwCochain) -> Self {
        let mut out = self.clone();
        for (s, p) in &other.components {
            if let Some(c) = out.components.get_mut(s) {
                *c += p;
            }
        }
        out
    }

    /// `μ_*^* σ_β = σ_{β∘μ}` for every coface and codegeneracy within the stored levels.
    pub fn check_compatible(&self, space: &DescentSpace) -> Result<(), DescentError> {
        for l in 1..=self.levels {
            for beta in sequences(self.labels, l) {
                let sb = self.component(&beta)?;
                for i in 0..=l {
                    let mu = SimplicialMap::coface(l, i);
                    self.compare(space, &mu, &beta, sb)?;
                }
            }
            for beta in sequences(self.labels, l - 1) {
                let sb = self.component(&beta)?;
                for i in 0..l {
                    let mu = SimplicialMap::codegeneracy(l - 1, i);
                    self.compare(space, &mu, &beta, sb)?;
                }
            }
        }
        Ok(())
    }

    fn compare(&self, space: &DescentSpace, mu: &SimplicialMap, beta: &[usize], sb: &Poly) -> Result<(), DescentError> {
        let pulled = space.simp.pullback(mu, sb)?;
        let composed: Vec<usize> = mu.images.iter().map(|&j| beta[j]).collect();
        let target = self.component(&composed)?;
        let r = &pulled - target;
        if r.is_empty() {
            Ok(())
        } else {
            Err(DescentError::Incompatible(format!("{:?} along {:?}: {}", beta, mu.images, r)))
        }
    }
}
