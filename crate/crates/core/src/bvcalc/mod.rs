//! The BV operator on half-forms `f dx` in a flat Darboux chart.
//!
//! A half-form is stored as its coefficient `f`; `dx` is implicit.


use std::sync::Arc;

use thiserror::Error;

use crate::superpoly::{laurent_coeff, partial_formal, substitute, AlgebraError, Assignment, Kind, Poly, Universe, UniverseBuilder};
use crate::Q;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BvError {
    #[error("flow generator must be odd")]
    NotOdd,
    #[error("chart universe has no `{0}`")]
    Missing(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Ordered pairs `(x^a, ξ_a)` with parities `(p_a, p_a + 1)`.
#[derive(Clone, Debug)]
pub struct DarbouxChart {
    u: Arc<Universe>,
    pairs: Vec<(u16, u16)>,
    gauss: bool,
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

impl DarbouxChart {
    /// Pairs taken from an existing universe.
    pub fn from_universe(u: &Arc<Universe>, pairs: Vec<(u16, u16)>) -> Self {
        for &(x, xi) in &pairs {
            assert_ne!(u.gen(x).parity, u.gen(xi).parity, "Darboux pair of equal parity");
        }
        DarbouxChart { u: u.clone(), pairs, gauss: false }
    }

    /// Half-forms are read as `f e^{-|x|²/2} dx` over the even `x^a`, so that
    /// Gaussian moments realize the integral over the zero section.
    pub fn with_gaussian(mut self) -> Self {
        self.gauss = true;
        self
    }

    pub fn is_gaussian(&self) -> bool {
        self.gauss
    }

    /// Chart `x1.., xi1..` with the given coordinate parities and ghosts;
    /// `ξ_a` gets ghost `-1 - gh(x^a)`. Also declares `hbar` and a nilpotent `eps`.
    pub fn standard(parities: &[u8], ghosts: &[i32]) -> Self {
        let mut b = UniverseBuilder::new();
        b.hbar().nilpotent("eps");
        Self::declare(&mut b, parities, ghosts);
        let u = b.build().expect("chart universe");
        Self::find(&u, parities.len())
    }

    /// Adds the chart generators to a builder.
    pub fn declare(b: &mut UniverseBuilder, parities: &[u8], ghosts: &[i32]) {
        for (a, &p) in parities.iter().enumerate() {
            let g = ghosts.get(a).copied().unwrap_or(0);
            let kx = if p == 0 { Kind::EvenCoord } else { Kind::OddCoord };
            let kxi = if p == 0 { Kind::OddCoord } else { Kind::EvenCoord };
            b.push(&format!("x{}", a + 1), p, g, kx, false);
            b.push(&format!("xi{}", a + 1), 1 - p, -1 - g, kxi, false);
        }
    }

    /// Locates `x1..xn`, `xi1..xin` in a universe built with [`declare`](Self::declare).
    pub fn find(u: &Arc<Universe>, n: usize) -> Self {
        let pairs = (1..=n).map(|a| (u.idx(&format!("x{a}")), u.idx(&format!("xi{a}")))).collect();
        Self::from_universe(u, pairs)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.u
    }

    pub fn pairs(&self) -> &[(u16, u16)] {
        &self.pairs
    }

    /// Same chart with the pairs listed in another order; `dx` changes by the returned sign.
    pub fn permuted(&self, perm: &[usize]) -> (Self, i64) {
        let pairs: Vec<_> = perm.iter().map(|&i| self.pairs[i]).collect();
        // dx = dx^1 ... dx^n picks a sign from transposing odd x's
        let mut s = 1;
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if perm[i] > perm[j] && self.u.is_odd(self.pairs[perm[i]].0) && self.u.is_odd(self.pairs[perm[j]].0) {
                    s = -s;
                }
            }
        }
        (DarbouxChart { u: self.u.clone(), pairs, gauss: self.gauss }, s)
    }

    pub fn x(&self, a: usize) -> Poly {
        Poly::gen(&self.u, self.pairs[a].0)
    }

    pub fn xi(&self, a: usize) -> Poly {
        Poly::gen(&self.u, self.pairs[a].1)
    }

    /// `Δ₀f = Σ (-1)^{p_a} ∂²f/∂x^a∂ξ_a`; with Gaussian dressing `∂/∂x^a`
    /// becomes `∂/∂x^a - x^a` on even coordinates.
    pub fn delta(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(&self.u);
        for &(x, xi) in &self.pairs {
            let dxi = partial_formal(xi, f);
            let mut d = partial_formal(x, &dxi);
            if self.gauss && !self.u.is_odd(x) {
                d -= &(&Poly::gen(&self.u, x) * &dxi);
            }
            if d.is_empty() {
                continue;
            }
            if self.u.is_odd(x) {
                out -= &d;
            } else {
                out += &d;
            }
        }
        out
    }

    /// `[Δ, m(f)]σ` for homogeneous `f`.
    fn delta_comm(&self, f: &Poly, pf: u8, s: &Poly) -> Poly {
        let a = self.delta(&(f * s));
        let b = f * &self.delta(s);
        if pf == 1 {
            &a + &b
        } else {
            &a - &b
        }
    }

    /// `(-1)^{|f|} [[Δ, m(f)], m(g)] σ`; a multiplication operator by `(f, g)`.
    pub fn antibracket_on(&self, f: &Poly, g: &Poly, s: &Poly) -> Poly {
        let mut out = Poly::zero(&self.u);
        let (fe, fo) = f.split_parity();
        let (ge, go) = g.split_parity();
        for (fp, pf) in [(&fe, 0u8), (&fo, 1)] {
            if fp.is_empty() {
                continue;
            }
            for (gp, pg) in [(&ge, 0u8), (&go, 1)] {
                if gp.is_empty() {
                    continue;
                }
                let a = self.delta_comm(fp, pf, &(gp * s));
                let b = gp * &self.delta_comm(fp, pf, s);
                let inner = if ((pf + 1) * pg) % 2 == 1 { &a + &b } else { &a - &b };
                out += &inner.scale_int(sign(pf == 1));
            }
        }
        out
    }

    /// The antibracket, read off from its operator definition on the test density `dx`.
    pub fn antibracket(&self, f: &Poly, g: &Poly) -> Poly {
        self.antibracket_on(f, g, &Poly::one(&self.u))
    }

    /// `H_f σ = (-1)^{|f|} [Δ, m(f)] σ`.
    pub fn hamlift(&self, f: &Poly, s: &Poly) -> Poly {
        let (fe, fo) = f.split_parity();
        let mut out = Poly::zero(&self.u);
        if !fe.is_empty() {
            out += &self.delta_comm(&fe, 0, s);
        }
        if !fo.is_empty() {
            out -= &self.delta_comm(&fo, 1, s);
        }
        out
    }

    fn eps(&self) -> Result<u16, BvError> {
        self.u.lookup("eps").ok_or(BvError::Missing("eps"))
    }

    fn hbar(&self) -> Result<u16, BvError> {
        self.u.hbar().ok_or(BvError::Missing("hbar"))
    }

    /// Transport of `σ dx` along `exp(εH_f)`: substitute
    /// `x^a -> x^a - ε∂f/∂ξ_a`, `ξ_a -> ξ_a + ε∂f/∂x^a` and multiply by the
    /// Berezinian of the flow, `1 - εΔ₀f` to first order.
    pub fn flow_first_order(&self, f: &Poly, s: &Poly) -> Result<Poly, BvError> {
        if f.parity() != Some(1) && !f.is_empty() {
            return Err(BvError::NotOdd);
        }
        let eps = Poly::gen(&self.u, self.eps()?);
        let mut asg = Assignment::new();
        for &(x, xi) in &self.pairs {
            let dx = &eps * &partial_formal(xi, f);
            let dxi = &eps * &partial_formal(x, f);
            asg.insert(x, &Poly::gen(&self.u, x) - &dx);
            asg.insert(xi, &Poly::gen(&self.u, xi) + &dxi);
        }
        let moved = substitute(s, &asg)?;
        let ber = &Poly::one(&self.u) - &(&eps * &self.delta(f));
        Ok(&moved * &ber)
    }

    /// `ħΔ₀S + ½(S, S)`.
    pub fn qme_residual(&self, s: &Poly) -> Result<Poly, BvError> {
        let h = Poly::gen(&self.u, self.hbar()?);
        let half = Q::new(1.into(), 2.into());
        Ok(&(&h * &self.delta(s)) + &self.antibracket(s, s).scale(&half))
    }

    /// Residuals of `S = Σ ħⁿSₙ` order by order: `(S₀,S₀)` at `ħ⁰`, then
    /// `Δ₀S_{n-1} + (S₀,Sₙ) + ½Σ_{0<i<n}(S_i,S_{n-i})` at `ħⁿ` (the cross
    /// term `(S₀,Sₙ)` appears once since `½((S₀,Sₙ)+(Sₙ,S₀)) = (S₀,Sₙ)`).
    pub fn qme_tower(&self, parts: &[Poly], n_max: usize) -> Vec<Poly> {
        let z = Poly::zero(&self.u);
        let get = |i: usize| parts.get(i).unwrap_or(&z);
        let half = Q::new(1.into(), 2.into());
        let mut out = vec![self.antibracket(get(0), get(0)).scale(&half)];
        for n in 1..=n_max {
            let mut r = self.delta(get(n - 1));
            r += &self.antibracket(get(0), get(n));
            for i in 1..n {
                r += &self.antibracket(get(i), get(n - i)).scale(&half);
            }
            out.push(r);
        }
        out
    }

    /// Laurent coefficients of [`qme_residual`](Self::qme_residual) in ħ, orders `0..=n_max`.
    pub fn qme_orders(&self, s: &Poly, n_max: usize) -> Result<Vec<Poly>, BvError> {
        let r = self.qme_residual(s)?;
        Ok((0..=n_max as i16).map(|k| laurent_coeff(&r, k)).collect())
    }
}
