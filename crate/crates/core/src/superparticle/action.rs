//! The particle action, its light-cone gauge restrictions and the
//! redefined spinor fields.

use std::sync::Arc;

use super::jet::{JetAlgebra, Shell};
use super::{th, thp, FieldRegistry, ParticleError, Shape};
use crate::clifford::{eta, light_cone_q, lightcone_projector, PMat, QMat, SpinorRep, DIM};
use crate::superpoly::{derivation, substitute, Assignment, Poly, Universe};
use crate::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gauge {
    /// `L(m₊)`
    MPlus,
    /// `L(m₋)`
    MMinus,
    /// `L(m(τ))` with symbolic `(cos πτ/2, sin πτ/2) = (ct, st)`.
    Tau,
}

impl Gauge {
    pub const ALL: [Gauge; 3] = [Gauge::MPlus, Gauge::MMinus, Gauge::Tau];

    pub fn name(self) -> &'static str {
        match self {
            Gauge::MPlus => "L(m+)",
            Gauge::MMinus => "L(m-)",
            Gauge::Tau => "L(tau)",
        }
    }

    /// The composite `r` with `r² = (p, m)`.
    fn r_name(self) -> &'static str {
        match self {
            Gauge::MPlus => "rp",
            Gauge::MMinus => "rm",
            Gauge::Tau => "rt",
        }
    }
}

/// How spinor fields are parametrized on the gauge slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    /// `θ = MΠ₊χ`-type parametrization of `ker cl(m)`: `Π_±` on `L(m_±)`,
    /// `g(τ)Π₊` on `L(τ)`.
    Constrained,
    /// The constrained fields rescaled: `θ_n = r^{-(2n+1)}Θ_n`,
    /// `θ⁺_n = r^{2n+1}Θ⁺_n`.
    Redefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    S0,
    /// `-½p_μT^μ(θ₀, ∂θ₀)`
    Kinetic,
    /// `p_μT^μ(θ⁺_n, θ_{n+1})`
    Tower(usize),
}

impl Term {
    pub fn name(self) -> String {
        match self {
            Term::S0 => "S0".into(),
            Term::Kinetic => "kinetic".into(),
            Term::Tower(n) => format!("tower-{n}"),
        }
    }
}

/// Residual of the gauge-fixed form of one action term.
#[derive(Clone, Debug)]
pub struct TowerCheck {
    pub gauge: Gauge,
    pub term: Term,
    pub residual: Poly,
}

#[derive(Clone, Debug)]
pub struct MomentRecord {
    pub name: String,
    pub gauge: Gauge,
    pub residual: Poly,
    /// `(μ, ν)`, `μ < ν`, whose Lorentz ghost survives the restriction.
    pub surviving: Vec<(usize, usize)>,
}

pub struct Particle {
    pub rep: SpinorRep,
    /// Tower terms `n = 0..=nmax`; the registry carries spinors up to `nmax + 1`.
    pub nmax: usize,
    pub off: JetAlgebra,
    pub on: JetAlgebra,
    /// `T γ^μ` as 32×32 bilinear forms.
    t1: Vec<QMat>,
    /// `T γ^{μν}` for `μ < ν`, row-major over pairs.
    t2: Vec<QMat>,
}

fn pair_index(mu: usize, nu: usize) -> usize {
    debug_assert!(mu < nu);
    mu * DIM - mu * (mu + 1) / 2 + (nu - mu - 1)
}

impl Particle {
    pub fn new(nmax: usize) -> Result<Self, ParticleError> {
        let rep = SpinorRep::build()?;
        let reg = FieldRegistry::new(nmax + 1);
        let t = rep.t_full().clone();
        // T(γa, b) = aᵀ γᵀ T b
        let t1 = (0..DIM).map(|mu| rep.gamma(mu).transpose().mul(&t)).collect();
        let mut t2 = Vec::new();
        for mu in 0..DIM {
            for nu in mu + 1..DIM {
                t2.push(rep.gamma2(mu, nu).transpose().mul(&t));
            }
        }
        Ok(Particle { rep, nmax, off: JetAlgebra::new(reg.clone(), Shell::Off), on: JetAlgebra::new(reg, Shell::Momentum), t1, t2 })
    }

    pub fn registry(&self) -> &FieldRegistry {
        &self.off.reg
    }

    pub fn u(&self) -> &Arc<Universe> {
        &self.off.reg.u
    }

    pub fn alg(&self, shell: Shell) -> &JetAlgebra {
        match shell {
            Shell::Off => &self.off,
            Shell::Momentum => &self.on,
        }
    }

    fn v(&self, field: &str, k: usize) -> Vec<Poly> {
        self.registry().vector(field, k)
    }

    fn p(&self, name: &str) -> Poly {
        self.registry().param(name)
    }

    /// `(a, b) = -η(a, b)`.
    pub fn lc(a: &[Poly], b: &[Poly]) -> Poly {
        let mut out = Poly::zero(a[0].universe());
        for mu in 0..DIM {
            let t = (&a[mu] * &b[mu]).scale_int(-eta(mu, mu));
            out += &t;
        }
        out
    }

    /// `Σ_μ c_μ T^μ(a, b)`.
    pub fn contract_t(&self, c: &[Poly], a: &[Poly], b: &[Poly]) -> Poly {
        let mut out = Poly::zero(self.u());
        for mu in 0..DIM {
            if c[mu].is_empty() {
                continue;
            }
            let t = self.t1[mu].bilinear(a, b);
            if !t.is_empty() {
                out += &(&c[mu] * &t);
            }
        }
        out
    }

    /// `T^{μν}(a, b)` for `μ < ν`.
    pub fn t2(&self, mu: usize, nu: usize, a: &[Poly], b: &[Poly]) -> Poly {
        self.t2[pair_index(mu, nu)].bilinear(a, b)
    }

    pub fn momentum(&self) -> Vec<Poly> {
        self.v("p", 0)
    }

    /// `p_μ∂x^μ - ½e(p, p) + (∂e⁺ - (x⁺, p))c`.
    pub fn action_s0(&self) -> Poly {
        let p = self.momentum();
        let mut s = Poly::zero(self.u());
        for (pm, dx) in p.iter().zip(self.v("x", 1)) {
            s += &(pm * &dx);
        }
        let e = self.registry().var("e", 0, 0);
        s -= &(&e * &Self::lc(&p, &p)).scale(&Q::new(1.into(), 2.into()));
        let coeff = &self.registry().var("ep", 0, 1) - &Self::lc(&self.v("xp", 0), &p);
        s += &(&coeff * &self.registry().var("c", 0, 0));
        s
    }

    pub fn salient(&self) -> Poly {
        self.contract_t(&self.momentum(), &self.v(&th(0), 0), &self.v(&th(0), 1)).scale(&Q::new((-1).into(), 2.into()))
    }

    pub fn tower(&self, n: usize) -> Result<Poly, ParticleError> {
        if n > self.nmax {
            return Err(ParticleError::Registry(format!("tower level {n} beyond cutoff {}", self.nmax)));
        }
        Ok(self.contract_t(&self.momentum(), &self.v(&thp(n), 0), &self.v(&th(n + 1), 0)))
    }

    pub fn term(&self, t: Term) -> Result<Poly, ParticleError> {
        match t {
            Term::S0 => Ok(self.action_s0()),
            Term::Kinetic => Ok(self.salient()),
            Term::Tower(n) => self.tower(n),
        }
    }

    /// `S₀ + salient + Σ_{n ≤ nmax}` tower terms.
    pub fn action(&self) -> Result<Poly, ParticleError> {
        let mut s = &self.action_s0() + &self.salient();
        for n in 0..=self.nmax {
            s += &self.tower(n)?;
        }
        Ok(s)
    }

    /// The null vector `m` of the gauge (`sign = 1`) or its partner `n` (`sign = -1`).
    fn null(&self, gauge: Gauge, sign: i64) -> Vec<Poly> {
        let u = self.u();
        match gauge {
            Gauge::MPlus | Gauge::MMinus => {
                let s = if gauge == Gauge::MPlus { sign } else { -sign };
                light_cone_q(s).into_iter().map(|c| Poly::constant(u, c)).collect()
            }
            Gauge::Tau => {
                let (c, s) = (self.p("ct"), self.p("st"));
                let half = Q::new(1.into(), 2.into());
                let cos = &(&c * &c) - &(&s * &s);
                let sin_over = &(&c * &s) * &Poly::gen_pow(u, u.idx("pstar"), -1);
                let mut v = vec![Poly::zero(u); DIM];
                v[0] = Poly::constant(u, half.clone());
                for (a, slot) in v.iter_mut().enumerate().take(9).skip(1) {
                    *slot = (&sin_over * &self.registry().var("p", a, 0)).scale_int(-sign);
                }
                v[9] = cos.scale(&(half * Q::from_integer(sign.into())));
                v
            }
        }
    }

    pub fn m_vec(&self, gauge: Gauge) -> Vec<Poly> {
        self.null(gauge, 1)
    }

    pub fn n_vec(&self, gauge: Gauge) -> Vec<Poly> {
        self.null(gauge, -1)
    }

    /// `(p, m)` as an explicit polynomial.
    pub fn pm(&self, gauge: Gauge) -> Poly {
        Self::lc(&self.momentum(), &self.m_vec(gauge))
    }

    pub fn r(&self, gauge: Gauge) -> Poly {
        self.p(gauge.r_name())
    }

    /// `g(τ) = ct - (st/p_*) p_aγ^{a9}`.
    pub fn g_tau(&self) -> PMat {
        let u = self.u();
        let id = QMat::identity(32);
        let ga9: Vec<QMat> = (1..=8).map(|a| self.rep.gamma2(a, 9)).collect();
        let mut terms: Vec<(Poly, &QMat)> = vec![(self.p("ct"), &id)];
        let k = -&(&self.p("st") * &Poly::gen_pow(u, u.idx("pstar"), -1));
        for a in 1..=8 {
            terms.push((&k * &self.registry().var("p", a, 0), &ga9[a - 1]));
        }
        PMat::combination(u, &terms)
    }

    fn frame_matrix(&self, gauge: Gauge) -> PMat {
        let u = self.u();
        let pi = |s| lightcone_projector(&self.rep, &light_cone_q(s), &light_cone_q(-s)).expect("standard light-cone pair");
        match gauge {
            Gauge::MPlus => PMat::from_q(u, &pi(1)),
            Gauge::MMinus => PMat::from_q(u, &pi(-1)),
            Gauge::Tau => self.g_tau().mul(&PMat::from_q(u, &pi(1))),
        }
    }

    /// The gauge equations `x⁺ = p⁺ = c⁺ = 0`, `e = 1`, `cl(m)θ_n = cl(m)θ⁺_n = 0`
    /// as a substitution on jets up to `max_order`.
    pub fn gauge_assignment(&self, gauge: Gauge, frame: Frame, shell: Shell, max_order: usize) -> Result<Assignment, ParticleError> {
        let alg = self.alg(shell);
        let reg = self.registry();
        let u = self.u();
        let mut asg = Assignment::new();
        for f in &reg.fields {
            match f.name.as_str() {
                "xp" | "pp" | "cp" | "e" => {
                    for i in 0..f.shape.len() {
                        for k in 0..=super::MAX_JET {
                            let val = if f.name == "e" && k == 0 { Poly::one(u) } else { Poly::zero(u) };
                            asg.insert(reg.jet(&f.name, i, k)?, val);
                        }
                    }
                }
                _ => {}
            }
        }
        let m = self.frame_matrix(gauge);
        for n in 0..=reg.cutoff {
            for (name, w) in [(th(n), -(2 * n as i32 + 1)), (thp(n), 2 * n as i32 + 1)] {
                let Shape::Spinor(ch) = reg.field(&name).expect("spinor").shape else { unreachable!() };
                let o = if ch == crate::clifford::Chirality::Plus { 0 } else { 16 };
                let mut val = m.apply(&self.v(&name, 0));
                if frame == Frame::Redefined {
                    let s = Poly::gen_pow(u, u.idx(gauge.r_name()), w as i16);
                    val = val.iter().map(|x| &s * x).collect();
                }
                for k in 0..=max_order {
                    if k > 0 {
                        val = val.iter().map(|x| alg.d(x)).collect::<Result<_, _>>()?;
                    }
                    for i in 0..16 {
                        asg.insert(reg.jet(&name, i, k)?, val[o + i].clone());
                    }
                }
            }
        }
        Ok(asg)
    }

    pub fn restrict(&self, f: &Poly, gauge: Gauge, frame: Frame, shell: Shell) -> Result<Poly, ParticleError> {
        let alg = self.alg(shell);
        let f = alg.to_shell(f)?;
        let asg = self.gauge_assignment(gauge, frame, shell, alg.max_order(&f))?;
        Ok(substitute(&f, &asg)?)
    }

    /// Representative modulo exact terms, skipping the normalizer when the
    /// argument already vanishes pointwise.
    pub fn reduce(&self, f: &Poly, shell: Shell) -> Result<Poly, ParticleError> {
        let alg = self.alg(shell);
        let f = alg.to_shell(f)?;
        if f.is_zero() {
            return Ok(Poly::zero(self.u()));
        }
        alg.normalize(&f)
    }

    /// The gauge-fixed form of a term, in unrestricted symbols.
    pub fn fixed_display(&self, term: Term, gauge: Gauge) -> Poly {
        let p = self.momentum();
        let nv = self.n_vec(gauge);
        match term {
            Term::S0 => {
                let mut s = Poly::zero(self.u());
                for (pm, dx) in p.iter().zip(self.v("x", 1)) {
                    s += &(pm * &dx);
                }
                s -= &Self::lc(&p, &p).scale(&Q::new(1.into(), 2.into()));
                s += &(&self.registry().var("ep", 0, 1) * &self.registry().var("c", 0, 0));
                s
            }
            Term::Kinetic => -&(&self.pm(gauge) * &self.contract_t(&nv, &self.v(&th(0), 0), &self.v(&th(0), 1))),
            Term::Tower(n) => (&self.pm(gauge) * &self.contract_t(&nv, &self.v(&thp(n), 0), &self.v(&th(n + 1), 0))).scale_int(2),
        }
    }

    /// `ι*(term) - ` its gauge-fixed form, modulo exact terms. `L(τ)` needs the
    /// momentum shell, since `m(τ)` depends on `p`.
    pub fn lemma_fixed(&self, term: Term, gauge: Gauge, shell: Shell) -> Result<TowerCheck, ParticleError> {
        let lhs = self.restrict(&self.term(term)?, gauge, Frame::Constrained, shell)?;
        let rhs = self.restrict(&self.fixed_display(term, gauge), gauge, Frame::Constrained, shell)?;
        Ok(TowerCheck { gauge, term, residual: self.reduce(&(&lhs - &rhs), shell)? })
    }

    /// Whether the `L(τ)` form of `term` holds without the momentum shell,
    /// decided by the variational test.
    pub fn lemma_fixed_holds_off_shell(&self, term: Term) -> Result<bool, ParticleError> {
        let lhs = self.restrict(&self.term(term)?, Gauge::Tau, Frame::Constrained, Shell::Off)?;
        let rhs = self.restrict(&self.fixed_display(term, Gauge::Tau), Gauge::Tau, Frame::Constrained, Shell::Off)?;
        self.off.is_exact(&(&lhs - &rhs))
    }

    /// Every term `S0`, kinetic and tower `n ≤ nmax`, over one gauge.
    pub fn lemma_fixed_all(&self, gauge: Gauge) -> Result<Vec<TowerCheck>, ParticleError> {
        let shell = if gauge == Gauge::Tau { Shell::Momentum } else { Shell::Off };
        let mut terms = vec![Term::S0, Term::Kinetic];
        terms.extend((0..=self.nmax).map(Term::Tower));
        terms.into_iter().map(|t| self.lemma_fixed(t, gauge, shell)).collect()
    }

    /// Free massless superparticle action in unrestricted symbols:
    /// `p∂x - ½(p,p) + ∂e⁺c - n_μT^μ(Θ₀,∂Θ₀) + 2Σ n_μT^μ(Θ⁺_n,Θ_{n+1})`.
    pub fn free_display(&self, gauge: Gauge) -> Poly {
        let nv = self.n_vec(gauge);
        let mut s = self.fixed_display(Term::S0, gauge);
        s -= &self.contract_t(&nv, &self.v(&th(0), 0), &self.v(&th(0), 1));
        for n in 0..=self.nmax {
            s += &self.contract_t(&nv, &self.v(&thp(n), 0), &self.v(&th(n + 1), 0)).scale_int(2);
        }
        s
    }

    /// The gauge-fixed action in the redefined fields.
    pub fn redefined_action(&self, gauge: Gauge) -> Result<Poly, ParticleError> {
        self.restrict(&self.action()?, gauge, Frame::Redefined, Shell::Momentum)
    }

    /// Redefined action minus the free display, modulo exact terms on shell.
    pub fn free_action_residual(&self, gauge: Gauge) -> Result<Poly, ParticleError> {
        let lhs = self.redefined_action(gauge)?;
        let rhs = self.restrict(&self.free_display(gauge), gauge, Frame::Constrained, Shell::Momentum)?;
        self.reduce(&(&lhs - &rhs), Shell::Momentum)
    }

    /// Derivative along the circle `(ct, st)`, with momenta fixed.
    pub fn circle_derivative(&self, f: &Poly) -> Poly {
        let u = self.u();
        let (ct, st, rt) = (u.idx("ct"), u.idx("st"), u.idx("rt"));
        let mut images = vec![(st, Poly::gen(u, ct)), (ct, -&Poly::gen(u, st))];
        let rhs = Poly::from_terms(u, u.relation(rt).expect("rt relation").rhs.iter().cloned());
        let d_rhs = derivation(&rhs, &images);
        images.push((rt, &Poly::gen_pow(u, rt, -1).scale(&Q::new(1.into(), 2.into())) * &d_rhs));
        derivation(f, &images)
    }

    /// `d/dτ` of the redefined `L(τ)` action, modulo exact terms on shell.
    pub fn tau_independence_residual(&self) -> Result<Poly, ParticleError> {
        let f = self.redefined_action(Gauge::Tau)?;
        self.reduce(&self.circle_derivative(&f), Shell::Momentum)
    }

    /// `-(π/p_*) Σ_{n ≤ N} p_aT^{a9}(θ⁺_n, θ_n)`; `None` is the empty tower.
    pub fn psi(&self, cutoff: Option<usize>) -> Poly {
        let u = self.u();
        let mut s = Poly::zero(u);
        let Some(top) = cutoff else { return s };
        for n in 0..=top.min(self.registry().cutoff) {
            let (a, b) = (self.v(&thp(n), 0), self.v(&th(n), 0));
            for c in 1..=8 {
                s += &(&self.registry().var("p", c, 0) * &self.t2(c, 9, &a, &b));
            }
        }
        let k = -&(&self.p("pi") * &Poly::gen_pow(u, u.idx("pstar"), -1));
        &k * &s
    }

    /// `η₊₋ = ψ dτ` written in the redefined fields `Θ`; the registry symbols
    /// stand for `Θ_n`, `Θ⁺_n`.
    pub fn eta_plus_minus(&self, cutoff: Option<usize>) -> Poly {
        self.psi(cutoff)
    }

    /// `ψ` in the original fields, rewritten through `θ_n = r^{-(2n+1)}Θ_n`,
    /// `θ⁺_n = r^{2n+1}Θ⁺_n`, minus the display in `Θ`.
    pub fn eta_residual(&self, cutoff: Option<usize>) -> Result<Poly, ParticleError> {
        let u = self.u();
        let reg = self.registry();
        let r = u.idx("rt");
        let mut asg = Assignment::new();
        for n in 0..=reg.cutoff {
            for (name, w) in [(th(n), -(2 * n as i16 + 1)), (thp(n), 2 * n as i16 + 1)] {
                for i in 0..16 {
                    let g = reg.jet(&name, i, 0)?;
                    asg.insert(g, &Poly::gen_pow(u, r, w) * &Poly::gen(u, g));
                }
            }
        }
        let rewritten = substitute(&self.psi(cutoff), &asg)?;
        Ok((&rewritten - &self.eta_plus_minus(cutoff)).canonical())
    }

    fn eps(&self) -> Vec<Poly> {
        let u = self.u();
        let mut v = vec![Poly::zero(u); 32];
        for i in 0..16 {
            v[i] = self.p(&format!("eps{}", i + 1));
        }
        v
    }

    fn pair_t(&self, a: &[Poly], b: &[Poly]) -> Poly {
        self.rep.t_full().bilinear(a, b)
    }

    /// `-½ T(x⁺_μγ^μθ₀, ε)`.
    pub fn susy_second_term(&self) -> Poly {
        let u = self.u();
        let xp = self.v("xp", 0);
        let th0 = self.v(&th(0), 0);
        let mut w = vec![Poly::zero(u); 32];
        for mu in 0..DIM {
            for (wi, gi) in w.iter_mut().zip(self.rep.gamma(mu).apply(&th0)) {
                if !gi.is_empty() {
                    *wi += &(&xp[mu] * &gi);
                }
            }
        }
        self.pair_t(&w, &self.eps()).scale(&Q::new((-1).into(), 2.into()))
    }

    pub fn susy_moment(&self) -> Poly {
        &self.pair_t(&self.v(&thp(0), 0), &self.eps()) + &self.susy_second_term()
    }

    /// The bracket multiplying the Lorentz ghost `ε_{μν}`:
    /// `η^{λ[μ}x^{ν]}x⁺_λ - η^{λ[μ}p^{+ν]}p_λ - Σ_n T^{μν}(θ⁺_n, θ_n)`.
    pub fn lorentz_bracket(&self, mu: usize, nu: usize, pplus: &[Poly]) -> Poly {
        let mut s = &Self::antisym(mu, nu, &self.v("xp", 0), &self.v("x", 0)) - &Self::antisym(mu, nu, &self.momentum(), pplus);
        for n in 0..=self.nmax {
            s -= &self.t2(mu, nu, &self.v(&thp(n), 0), &self.v(&th(n), 0));
        }
        s
    }

    /// `η^{λ[μ}b^{ν]}a_λ`.
    fn antisym(mu: usize, nu: usize, a: &[Poly], b: &[Poly]) -> Poly {
        let t = &(&b[nu] * &a[mu]).scale_int(eta(mu, mu)) - &(&b[mu] * &a[nu]).scale_int(eta(nu, nu));
        t.scale(&Q::new(1.into(), 2.into()))
    }

    pub fn lorentz_moment(&self) -> Poly {
        let pp = self.v("pp", 0);
        let mut s = Poly::zero(self.u());
        for mu in 0..DIM {
            for nu in mu + 1..DIM {
                s += &(&self.p(&format!("lor{mu}_{nu}")) * &self.lorentz_bracket(mu, nu, &pp));
            }
        }
        s
    }

    /// `p^{+a}(τ)` from the closed form of the flow, in terms of the `L₊` fields.
    fn p_plus_tau(&self) -> Result<Vec<Poly>, ParticleError> {
        let u = self.u();
        let inv = Poly::gen_pow(u, u.idx("pstar"), -1);
        let cs = &(&self.p("ct") * &self.p("st")) * &inv;
        let inv2 = inv.pow(2);
        let asg = self.gauge_assignment(Gauge::MPlus, Frame::Constrained, Shell::Momentum, 0)?;
        let mut out = vec![Poly::zero(u); DIM];
        for n in 0..=self.nmax {
            let (a, b) = (self.v(&thp(n), 0), self.v(&th(n), 0));
            let tc9: Vec<Poly> = (1..=8).map(|c| substitute(&self.t2(c, 9, &a, &b), &asg)).collect::<Result<_, _>>()?;
            let mut pc = Poly::zero(u);
            for c in 1..=8 {
                pc += &(&self.registry().var("p", c, 0) * &tc9[c - 1]);
            }
            for a in 1..=8 {
                let inner = &(&(&self.registry().var("p", a, 0) * &pc) * &inv2) - &tc9[a - 1];
                out[a] += &(&cs * &inner);
            }
        }
        Ok(out)
    }

    /// Restrictions of the translation, supersymmetry and Lorentz moments.
    /// Residuals are measured against the expected gauge-fixed forms.
    pub fn moment_restrictions(&self, gauge: Gauge) -> Result<Vec<MomentRecord>, ParticleError> {
        let shell = Shell::Momentum;
        let restrict = |f: &Poly| self.restrict(f, gauge, Frame::Constrained, shell);
        let mut out = Vec::new();
        let mut tr = Poly::zero(self.u());
        for x in self.v("xp", 0) {
            tr += &restrict(&x)?;
        }
        out.push(MomentRecord { name: "translation".into(), gauge, residual: tr.canonical(), surviving: vec![] });
        out.push(MomentRecord { name: "susy-second-term".into(), gauge, residual: restrict(&self.susy_second_term())?.canonical(), surviving: vec![] });
        let susy = &restrict(&self.susy_moment())? - &restrict(&self.pair_t(&self.v(&thp(0), 0), &self.eps()))?;
        out.push(MomentRecord { name: "susy".into(), gauge, residual: susy.canonical(), surviving: vec![] });

        // p⁺(τ) is already written in restricted fields, so it is added after
        // the restriction of the remaining terms
        let zero = vec![Poly::zero(self.u()); DIM];
        let pplus = match gauge {
            Gauge::Tau => self.p_plus_tau()?,
            _ => zero.clone(),
        };
        let mut surviving = Vec::new();
        let mut total = Poly::zero(self.u());
        let mut expected = Poly::zero(self.u());
        for mu in 0..DIM {
            for nu in mu + 1..DIM {
                let b = &restrict(&self.lorentz_bracket(mu, nu, &zero))? - &Self::antisym(mu, nu, &self.momentum(), &pplus);
                if !b.is_zero() {
                    surviving.push((mu, nu));
                }
                let l = self.p(&format!("lor{mu}_{nu}"));
                total += &(&l * &b);
                let light = (mu == 0 && nu < 9) || (mu > 0 && nu == 9);
                if light && gauge != Gauge::Tau {
                    let mut t = Poly::zero(self.u());
                    for n in 0..=self.nmax {
                        t -= &self.t2(mu, nu, &self.v(&thp(n), 0), &self.v(&th(n), 0));
                    }
                    expected += &(&l * &restrict(&t)?);
                }
            }
        }
        let residual = match gauge {
            Gauge::Tau => {
                let mut at0 = Assignment::new();
                at0.insert(self.u().idx("ct"), Poly::one(self.u()));
                at0.insert(self.u().idx("st"), Poly::zero(self.u()));
                let plus = self.restrict(&self.lorentz_moment(), Gauge::MPlus, Frame::Constrained, shell)?;
                (&substitute(&total, &at0)? - &plus).canonical()
            }
            _ => (&total - &expected).canonical(),
        };
        out.push(MomentRecord { name: "lorentz".into(), gauge, residual, surviving });
        Ok(out)
    }

    /// Logarithmic Berezinian weights of the redefinition per tower level:
    /// `Θ_n`, `Θ⁺_n` scale by `(p,m)^{±(n+½)}`, counted with the sign of their
    /// parity, giving `-(2n+1)(-1)^n`.
    pub fn berezinian_weights(&self) -> Vec<Q> {
        let reg = self.registry();
        (0..=self.nmax)
            .map(|n| {
                let w = Q::new((2 * n as i64 + 1).into(), 2.into());
                let mut s = Q::from_integer(0.into());
                for (name, sign) in [(th(n), 1), (thp(n), -1)] {
                    let par = reg.field(&name).expect("spinor").parity;
                    let t = &w * Q::from_integer(sign.into());
                    s += if par == 0 { t } else { -t };
                }
                s
            })
            .collect()
    }
}
