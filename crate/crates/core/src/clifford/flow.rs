//! The one-parameter group `g(τ) = c - (s/p_*) p_aγ^{a9}` with
//! `(c, s) = (cos πτ/2, sin πτ/2)`, over `Q[c, s, p_a, p_*^{±1}]/(c²+s²-1, p_*²-Σp_a²)`.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::{half, light_cone_q, lightcone_projector, pair_t, pair_t2, Chirality, MinkowskiVector, PMat, QMat, SpinorRep, SpinorVector, DIM};
use crate::superpoly::{partial_formal, substitute, Assignment, Poly, Universe, UniverseBuilder};
use crate::Q;

/// Generators: `s, s2, p1..p8, pp1..pp8` (the `p^{+a}`), the algebraic
/// `c, c2, pstar`, and for every `n ≤ nmax` spinor components `th{n}_i`,
/// `thp{n}_i`, odd for even `n`.
#[derive(Clone, Debug)]
pub struct FlowRing {
    pub u: Arc<Universe>,
    pub nmax: usize,
}

impl FlowRing {
    pub fn new(nmax: usize) -> Self {
        let mut b = UniverseBuilder::new();
        b.param("s").param("s2");
        for a in 1..=8 {
            b.param(&format!("p{a}"));
        }
        for a in 1..=8 {
            b.param(&format!("pp{a}"));
        }
        b.alg_const("c", "1 - s^2", false);
        b.alg_const("c2", "1 - s2^2", false);
        let norm: Vec<String> = (1..=8).map(|a| format!("p{a}^2")).collect();
        b.alg_const("pstar", &norm.join(" + "), true);
        for n in 0..=nmax {
            for pre in ["th", "thp"] {
                for i in 1..=16 {
                    let name = format!("{pre}{n}_{i}");
                    if n % 2 == 0 {
                        b.odd_const(&name);
                    } else {
                        b.param(&name);
                    }
                }
            }
        }
        FlowRing { u: b.build().expect("static universe"), nmax }
    }

    pub fn var(&self, name: &str) -> Poly {
        Poly::var(&self.u, name)
    }

    pub fn p(&self, a: usize) -> Poly {
        self.var(&format!("p{a}"))
    }

    pub fn pstar_inv(&self) -> Poly {
        Poly::gen_pow(&self.u, self.u.idx("pstar"), -1)
    }

    /// `θ_n ∈ S₊` for even `n` and `S₋` for odd `n`; `θ⁺_n` has the other chirality.
    pub fn chirality(n: usize) -> (Chirality, Chirality) {
        if n % 2 == 0 {
            (Chirality::Plus, Chirality::Minus)
        } else {
            (Chirality::Minus, Chirality::Plus)
        }
    }

    /// `∂/∂p_a` with `p_*` treated as the function `(Σ p_b²)^{1/2}`.
    pub fn d_pa(&self, a: usize, f: &Poly) -> Poly {
        let pa = self.u.idx(&format!("p{a}"));
        let ps = self.u.idx("pstar");
        let chain = &(&self.p(a) * &self.pstar_inv()) * &partial_formal(ps, f);
        &partial_formal(pa, f) + &chain
    }

    pub fn eval(&self, f: &Poly, values: &[(&str, Q)]) -> Result<Poly, crate::AlgebraError> {
        let mut asg = Assignment::new();
        for (name, v) in values {
            asg.insert(self.u.idx(name), Poly::constant(&self.u, v.clone()));
        }
        substitute(f, &asg)
    }
}

pub struct LcFlow {
    pub rep: SpinorRep,
    pub ring: FlowRing,
    /// `γ^{a9}`, `a = 1..8`.
    ga9: Vec<QMat>,
}

impl LcFlow {
    pub fn new(rep: SpinorRep, nmax: usize) -> Self {
        let ga9 = (1..=8).map(|a| rep.gamma2(a, 9)).collect();
        LcFlow { rep, ring: FlowRing::new(nmax), ga9 }
    }

    pub fn u(&self) -> &Arc<Universe> {
        &self.ring.u
    }

    /// `p_aγ^{a9}`.
    pub fn j_num(&self) -> PMat {
        let terms: Vec<(Poly, &QMat)> = (1..=8).map(|a| (self.ring.p(a), &self.ga9[a - 1])).collect();
        PMat::combination(self.u(), &terms)
    }

    /// `g = c·1 - (s/p_*) p_aγ^{a9}` for arbitrary ring elements `c`, `s`.
    pub fn g_at(&self, c: &Poly, s: &Poly) -> PMat {
        let id = QMat::identity(32);
        let mut terms: Vec<(Poly, &QMat)> = vec![(c.clone(), &id)];
        let k = -&(s * &self.ring.pstar_inv());
        for a in 1..=8 {
            terms.push((&k * &self.ring.p(a), &self.ga9[a - 1]));
        }
        PMat::combination(self.u(), &terms)
    }

    pub fn g(&self) -> PMat {
        self.g_at(&self.ring.var("c"), &self.ring.var("s"))
    }

    pub fn g_inv(&self) -> PMat {
        self.g_at(&self.ring.var("c"), &-&self.ring.var("s"))
    }

    /// `(p_aγ^{a9})² + p_*²`.
    pub fn j_square_residual(&self) -> PMat {
        let j = self.j_num();
        let ps2 = self.ring.var("pstar").pow(2);
        let id = PMat::from_q(self.u(), &QMat::identity(32)).map(|x| x * &ps2);
        let mut r = j.mul(&j);
        r.e.iter_mut().zip(&id.e).for_each(|(a, b)| *a += b);
        r
    }

    /// `g(c₁,s₁)g(c₂,s₂) - g(c₁c₂ - s₁s₂, s₁c₂ + c₁s₂)`.
    pub fn group_law_residual(&self) -> PMat {
        let r = &self.ring;
        let (c1, s1, c2, s2) = (r.var("c"), r.var("s"), r.var("c2"), r.var("s2"));
        let lhs = self.g_at(&c1, &s1).mul(&self.g_at(&c2, &s2));
        let c = &(&c1 * &c2) - &(&s1 * &s2);
        let s = &(&s1 * &c2) + &(&c1 * &s2);
        lhs.sub(&self.g_at(&c, &s))
    }

    /// `m(τ)` (`sign = 1`) and `n(τ)` (`sign = -1`):
    /// `½(E⁰ ± (c²-s²)E⁹ ∓ (2cs/p_*)p_aE^a)`.
    pub fn m_tau(&self, sign: i64) -> MinkowskiVector {
        let r = &self.ring;
        let u = self.u();
        let (c, s) = (r.var("c"), r.var("s"));
        let cos = &(&c * &c) - &(&s * &s);
        let sin_over = &(&c * &s) * &r.pstar_inv();
        let mut v = vec![Poly::zero(u); DIM];
        v[0] = Poly::constant(u, half());
        for a in 1..=8 {
            v[a] = (&sin_over * &r.p(a)).scale_int(-sign);
        }
        v[9] = cos.scale(&(half() * Q::from_integer(sign.into())));
        MinkowskiVector::new(v)
    }

    /// `g cl(m_±) g⁻¹ - cl(m(τ))` for `sign = 1` and the same with `m₋`,
    /// `n(τ)` for `sign = -1`.
    pub fn conjugation_residual(&self, sign: i64) -> PMat {
        let clm = PMat::from_q(self.u(), &self.rep.cl_q(&light_cone_q(sign)));
        let lhs = self.g().mul(&clm).mul(&self.g_inv());
        lhs.sub(&self.m_tau(sign).cl(&self.rep))
    }

    /// `Π₊θ` with `Π₊` the projector onto `ker cl(m₊)`.
    fn constrained(&self, ch: Chirality, prefix: &str) -> Vec<Poly> {
        let p = lightcone_projector(&self.rep, &light_cone_q(1), &light_cone_q(-1)).expect("standard pair");
        SpinorVector::symbols(self.u(), ch, prefix).apply_q(&p)
    }

    /// For each `a = 1..8`: the flow value
    /// `p^{+a} + Σ_n T(∂_a g g⁻¹ θ⁺_n(τ), θ_n(τ))` with `θ(τ) = gθ` and
    /// `cl(m₊)θ = 0`, minus the closed form
    /// `p^{+a} + (cs/p_*)(p_a p_c T^{c9}(θ⁺_n, θ_n)/p_*² - T^{a9}(θ⁺_n, θ_n))`,
    /// where `cs = ½ sin πτ`.
    pub fn p_plus_flow_residual(&self) -> Vec<Poly> {
        let r = &self.ring;
        let u = self.u();
        let g = self.g();
        let g_inv = self.g_inv();
        let dg: Vec<PMat> = (1..=8).map(|a| g.map(|x| r.d_pa(a, x))).collect();
        let cs_over = &(&r.var("c") * &r.var("s")) * &r.pstar_inv();
        let inv2 = r.pstar_inv().pow(2);
        let mut out: Vec<Poly> = (1..=8).map(|a| r.var(&format!("pp{a}"))).collect();
        let mut closed = out.clone();
        for n in 0..=r.nmax {
            let (cth, cthp) = FlowRing::chirality(n);
            let th = self.constrained(cth, &format!("th{n}_"));
            let thp = self.constrained(cthp, &format!("thp{n}_"));
            let th_t = g.apply(&th);
            let thp_t = g.apply(&thp);
            let back = g_inv.apply(&thp_t);
            let tc9: Vec<Poly> = (1..=8).map(|c| pair_t2(&self.rep, c, 9, &thp, &th)).collect();
            let mut pc_tc9 = Poly::zero(u);
            for c in 1..=8 {
                pc_tc9 += &(&r.p(c) * &tc9[c - 1]);
            }
            for a in 1..=8 {
                out[a - 1] += &pair_t(&self.rep, &dg[a - 1].apply(&back), &th_t);
                let inner = &(&(&r.p(a) * &pc_tc9) * &inv2) - &tc9[a - 1];
                closed[a - 1] += &(&cs_over * &inner);
            }
        }
        out.iter().zip(&closed).map(|(a, b)| (a - b).canonical()).collect()
    }

    /// At `(c, s) = (0, 1)`: `m(τ) = m₋`, and `g` carries `ker cl(m₊)` onto
    /// `ker cl(m₋)`, so the `L(τ)` spinor equations become those of `L₋`.
    /// Returns `(m(1) - m₋, (1 - Π₋) g Π₊)`.
    pub fn l_one_residual(&self) -> Result<(Vec<Poly>, PMat), crate::AlgebraError> {
        let r = &self.ring;
        let at = |f: &Poly| r.eval(f, &[("c", Q::zero()), ("s", Q::one())]);
        let m1 = self.m_tau(1);
        let m_minus = MinkowskiVector::light_cone(self.u(), -1);
        let dm = m1.v.iter().zip(&m_minus.v).map(|(a, b)| Ok((&at(a)? - b).canonical())).collect::<Result<Vec<_>, crate::AlgebraError>>()?;
        let pp = lightcone_projector(&self.rep, &light_cone_q(1), &light_cone_q(-1)).expect("standard pair");
        let pm = lightcone_projector(&self.rep, &light_cone_q(-1), &light_cone_q(1)).expect("standard pair");
        let comp = QMat::identity(32).sub(&pm);
        let g1 = self.g().map(|x| at(x).expect("constant substitution"));
        let r = PMat::from_q(self.u(), &comp).mul(&g1).mul(&PMat::from_q(self.u(), &pp));
        Ok((dm, r))
    }
}
