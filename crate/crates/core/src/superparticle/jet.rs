//! The world-line derivative `∂` on jets, integration by parts and the
//! variational (Euler) test for `∂`-exactness.

use std::collections::{BTreeMap, HashMap};

use super::{FieldRegistry, ParticleError, MAX_JET};
use crate::superpoly::{derivation, partial_formal, substitute, Assignment, Mono, Poly};
use crate::Q;

/// `Off`: all jets are independent. `Momentum`: the ideal generated by
/// `∂p_μ` (the `x` equation of motion) is divided out, so momenta and the
/// composites built from them are constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shell {
    Off,
    Momentum,
}

#[derive(Clone, Copy, Debug)]
struct JetInfo {
    comp: usize,
    order: usize,
    rank: usize,
    momentum: bool,
}

/// Names of the composites in dependency order; each is `√rhs`.
const COMPOSITES: [&str; 4] = ["pstar", "rp", "rm", "rt"];

#[derive(Clone, Debug)]
pub struct JetAlgebra {
    pub reg: FieldRegistry,
    pub shell: Shell,
    info: HashMap<u16, JetInfo>,
    /// Jets by component index.
    comps: Vec<Vec<u16>>,
    images: Vec<(u16, Poly)>,
    /// `∂c/∂p_μ` for every composite `c`, by momentum component.
    chain: BTreeMap<u16, Vec<(u16, Poly)>>,
    composite_ids: Vec<u16>,
    p_rank: usize,
}

impl JetAlgebra {
    pub fn new(reg: FieldRegistry, shell: Shell) -> Self {
        let u = reg.u.clone();
        let mut info = HashMap::new();
        let mut comps = Vec::new();
        let mut p_rank = 0;
        for f in &reg.fields {
          for i in 0..f.shape.len() {
            let ids = reg.jets[&(f.name.clone(), i)].clone();
            let rank = comps.len();
            let momentum = f.name == "p";
            if momentum {
                p_rank = rank;
            }
            for (order, &g) in ids.iter().enumerate() {
                info.insert(g, JetInfo { comp: rank, order, rank, momentum });
            }
            comps.push(ids);
          }
        }
        let composite_ids: Vec<u16> = COMPOSITES.iter().map(|c| u.idx(c)).collect();
        let rhs = |c: u16| Poly::from_terms(&u, u.relation(c).expect("composite relation").rhs.iter().cloned());

        let mut images = Vec::new();
        for ids in &comps {
            for k in 0..MAX_JET {
                let momentum = info[&ids[k]].momentum;
                if !(momentum && shell == Shell::Momentum) {
                    images.push((ids[k], Poly::gen(&u, ids[k + 1])));
                }
            }
        }
        if shell == Shell::Off {
            for &c in &composite_ids {
                let d_rhs = derivation(&rhs(c), &images);
                let half_inv = Poly::gen_pow(&u, c, -1).scale(&Q::new(1.into(), 2.into()));
                images.push((c, &half_inv * &d_rhs));
            }
        }

        let mut chain = BTreeMap::new();
        for ids in &comps {
            if !info[&ids[0]].momentum {
                continue;
            }
            let g = ids[0];
            let mut known: Vec<(u16, Poly)> = Vec::new();
            for &c in &composite_ids {
                let r = rhs(c);
                let mut d = partial_formal(g, &r);
                for (c2, dc2) in &known {
                    d += &(&partial_formal(*c2, &r) * dc2);
                }
                let half_inv = Poly::gen_pow(&u, c, -1).scale(&Q::new(1.into(), 2.into()));
                known.push((c, &half_inv * &d));
            }
            chain.insert(g, known);
        }
        JetAlgebra { reg, shell, info, comps, images, chain, composite_ids, p_rank }
    }

    fn active(&self, g: u16) -> Option<JetInfo> {
        let i = *self.info.get(&g)?;
        if i.momentum && self.shell == Shell::Momentum {
            None
        } else {
            Some(i)
        }
    }

    /// The world-line derivative.
    pub fn d(&self, f: &Poly) -> Result<Poly, ParticleError> {
        for m in f.terms().keys() {
            for &(g, _) in m.factors() {
                if let Some(i) = self.active(g) {
                    if i.order == MAX_JET {
                        return Err(ParticleError::JetOrder(MAX_JET + 1));
                    }
                }
            }
        }
        Ok(derivation(f, &self.images))
    }

    pub fn d_n(&self, f: &Poly, n: usize) -> Result<Poly, ParticleError> {
        (0..n).try_fold(f.clone(), |acc, _| self.d(&acc))
    }

    /// Image in the momentum-shell quotient: `∂^k p = 0` for `k ≥ 1`.
    pub fn to_shell(&self, f: &Poly) -> Result<Poly, ParticleError> {
        if self.shell == Shell::Off {
            return Ok(f.clone());
        }
        let u = &self.reg.u;
        let mut asg = Assignment::new();
        for ids in &self.comps {
            if self.info[&ids[0]].momentum {
                for &g in &ids[1..] {
                    asg.insert(g, Poly::zero(u));
                }
            }
        }
        Ok(substitute(f, &asg)?)
    }

    /// `∂f/∂g`, including the dependence of the composites on momenta.
    fn partial_total(&self, g: u16, f: &Poly) -> Poly {
        let mut out = partial_formal(g, f);
        if self.shell == Shell::Off {
            if let Some(chain) = self.chain.get(&g) {
                for (c, dc) in chain {
                    let pc = partial_formal(*c, f);
                    if !pc.is_empty() {
                        out += &(&pc * dc);
                    }
                }
            }
        }
        out
    }

    /// `E_g f = Σ_k (-∂)^k ∂f/∂g^{(k)}` for the component with jets `ids`.
    pub fn euler(&self, comp: usize, f: &Poly) -> Result<Poly, ParticleError> {
        let ids = &self.comps[comp];
        let mut out = Poly::zero(&self.reg.u);
        for (k, &g) in ids.iter().enumerate() {
            let pd = self.partial_total(g, f);
            if pd.is_empty() {
                continue;
            }
            let term = self.d_n(&pd, k)?;
            out += &if k % 2 == 0 { term } else { -&term };
        }
        Ok(out)
    }

    /// `f = ∂G` for some local `G`: every variational derivative vanishes
    /// and no term is free of fields.
    pub fn is_exact(&self, f: &Poly) -> Result<bool, ParticleError> {
        let f = self.to_shell(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let free = f.filter(|m| !m.factors().iter().any(|&(g, _)| self.active(g).is_some()));
        if !free.is_zero() {
            return Ok(false);
        }
        for (comp, ids) in self.comps.iter().enumerate() {
            if self.active(ids[0]).is_none() || !f.terms().keys().any(|m| ids.iter().any(|&g| m.exp(g) != 0)) {
                continue;
            }
            if !self.euler(comp, &f)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ordering key `(order, rank)`; composites sit at order 0 level with
    /// the top momentum component.
    fn key(&self, g: u16) -> Option<(usize, usize)> {
        if let Some(i) = self.active(g) {
            return Some((i.order, i.rank));
        }
        if self.shell == Shell::Off && self.composite_ids.contains(&g) {
            return Some((0, self.p_rank));
        }
        None
    }

    /// One integration by parts on a single term, if its leading jet allows it.
    fn ibp(&self, m: &Mono, c: &Q) -> Result<Option<Poly>, ParticleError> {
        let u = &self.reg.u;
        let lead = m
            .factors()
            .iter()
            .filter_map(|&(g, e)| self.active(g).map(|i| (i.order, i.rank, g, e)))
            .max_by_key(|t| (t.0, t.1));
        let Some((k, rank, v, e)) = lead else { return Ok(None) };
        if k == 0 || e != 1 {
            return Ok(None);
        }
        let comp = self.info[&v].comp;
        let w = self.comps[comp][k - 1];
        let j = m.exp(w);
        if j > 0 && u.is_odd(w) {
            return Ok(None);
        }
        for &(g, _) in m.factors() {
            if g == v || g == w {
                continue;
            }
            if let Some(key) = self.key(g) {
                if key >= (k - 1, rank) {
                    return Ok(None);
                }
            }
        }
        let term = Poly::from_term(u, m.clone(), c.clone());
        let b = partial_formal(v, &term);
        let b = b.map_terms(|mm, cc| Some((mm.with_exp(w, mm.exp(w) - j), cc.clone())));
        let wp = Poly::gen_pow(u, w, j + 1).scale(&-Q::new(1.into(), (j as i64 + 1).into()));
        Ok(Some(&wp * &self.d(&b)?))
    }

    /// Representative modulo `∂`-exact terms, reached by repeated integration
    /// by parts. Exact differential polynomials normalize to zero; once the
    /// composites `p_*`, `r` carry a derivative (off shell) the result can be
    /// nonzero for exact input, and [`JetAlgebra::is_exact`] decides.
    pub fn normalize(&self, f: &Poly) -> Result<Poly, ParticleError> {
        let mut todo = self.to_shell(f)?;
        let mut done = Poly::zero(&self.reg.u);
        while !todo.is_empty() {
            let mut next = Poly::zero(&self.reg.u);
            for (m, c) in todo.terms() {
                match self.ibp(m, c)? {
                    Some(p) => next += &p,
                    None => done.add_term(m.clone(), c.clone()),
                }
            }
            todo = next;
        }
        Ok(done.canonical())
    }

    /// Highest jet order occurring in `f`.
    pub fn max_order(&self, f: &Poly) -> usize {
        f.terms().keys().flat_map(|m| m.factors().iter().filter_map(|(g, _)| self.info.get(g).map(|i| i.order))).max().unwrap_or(0)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(&self.reg.u)
    }

    pub fn num_components(&self) -> usize {
        self.comps.len()
    }

    /// `(component, order)` of a jet generator.
    pub fn jet_of(&self, g: u16) -> Option<(usize, usize)> {
        self.info.get(&g).map(|i| (i.comp, i.order))
    }

    pub fn jets(&self, comp: usize) -> &[u16] {
        &self.comps[comp]
    }
}
