use std::sync::Arc;

use super::{over_trials, Check, SuiteConfig};
use crate::bvcalc::DarbouxChart;
use crate::random::{random_poly, stream_n};
use crate::superpoly::Poly;

/// Ring generators of random inputs: the chart coordinates and ħ.
fn gens(c: &DarbouxChart) -> Vec<u16> {
    let mut g: Vec<u16> = c.pairs().iter().flat_map(|&(a, b)| [a, b]).collect();
    g.push(c.universe().hbar().expect("chart declares hbar"));
    g
}

fn sgn(odd: bool, x: Poly) -> Poly {
    if odd {
        -x
    } else {
        x
    }
}

/// Nonzero `f, g, h` of parities given by the bits of `t`, and a density `s`.
struct Inputs {
    f: Poly,
    g: Poly,
    h: Poly,
    s: Poly,
}

fn inputs(c: &DarbouxChart, seed: u64, deg: usize, t: usize) -> Inputs {
    let gens = gens(c);
    let u = c.universe();
    let mut rng = stream_n(seed, "bv-inputs", t);
    let mut pick = |par: u8| loop {
        let f = random_poly(u, &mut rng, &gens, deg, 4, Some(par));
        if !f.is_empty() {
            return f;
        }
    };
    let (f, g, h) = (pick((t % 2) as u8), pick((t / 2 % 2) as u8), pick((t / 4 % 2) as u8));
    let s = random_poly(u, &mut rng, &gens, deg, 5, None);
    Inputs { f, g, h, s }
}

fn par(p: &Poly) -> u8 {
    p.par()
}

fn check<F>(name: &str, c: &Arc<DarbouxChart>, cfg: &SuiteConfig, f: F) -> Check
where
    F: Fn(&DarbouxChart, &Inputs) -> Poly + Send + Sync + 'static,
{
    let c = c.clone();
    let (seed, deg, n) = (cfg.seed, cfg.max_degree, cfg.trials);
    Check::one(name, n, move || over_trials(n, |t| Ok(f(&c, &inputs(&c, seed, deg, t)))))
}

pub(super) fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    // 3|3: even x1, x2, odd x3 and their odd/even partners
    let c = Arc::new(DarbouxChart::standard(&[0, 0, 1], &[]));
    let mut out = vec![
        check("bv-delta-squared", &c, cfg, |c, i| c.delta(&c.delta(&i.s))),
        check("bv-antisymmetry", &c, cfg, |c, i| {
            let (pf, pg) = (par(&i.f), par(&i.g));
            let odd = ((pf + 1) * (pg + 1)) % 2 == 1;
            &c.antibracket(&i.g, &i.f) + &sgn(odd, c.antibracket(&i.f, &i.g))
        }),
        check("bv-jacobi", &c, cfg, |c, i| {
            let (f, g, h) = (&i.f, &i.g, &i.h);
            let ab = |a: &Poly, b: &Poly| c.antibracket(a, b);
            let odd = ((par(f) + 1) * (par(g) + 1)) % 2 == 1;
            &(&ab(f, &ab(g, h)) - &ab(&ab(f, g), h)) - &sgn(odd, ab(g, &ab(f, h)))
        }),
        check("bv-hamlift-bracket", &c, cfg, |c, i| {
            let (f, g, s) = (&i.f, &i.g, &i.s);
            let odd = ((par(f) + 1) * par(g)) % 2 == 1;
            let comm = &c.hamlift(f, &(g * s)) - &sgn(odd, g * &c.hamlift(f, s));
            &comm - &(&c.antibracket(f, g) * s)
        }),
        check("bv-hamlift-product", &c, cfg, |c, i| {
            let (f, g, s) = (&i.f, &i.g, &i.s);
            let (pf, pg) = (par(f), par(g));
            let rhs = &(&(f * &c.hamlift(g, s)) + &sgn(pf * pg == 1, g * &c.hamlift(f, s))) + &sgn(pg == 1, &c.antibracket(f, g) * s);
            &c.hamlift(&(f * g), s) - &rhs
        }),
        check("bv-hamlift-commutator", &c, cfg, |c, i| {
            let (f, g, s) = (&i.f, &i.g, &i.s);
            let odd = ((par(f) + 1) * (par(g) + 1)) % 2 == 1;
            let comm = &c.hamlift(f, &c.hamlift(g, s)) - &sgn(odd, c.hamlift(g, &c.hamlift(f, s)));
            &c.hamlift(&c.antibracket(f, g), s) - &comm
        }),
        check("bv-hamlift-delta", &c, cfg, |c, i| {
            let (f, s) = (&i.f, &i.s);
            &c.hamlift(f, &c.delta(s)) - &sgn(par(f) == 0, c.delta(&c.hamlift(f, s)))
        }),
    ];

    let fc = c.clone();
    let (seed, deg, n) = (cfg.seed, cfg.max_degree, cfg.trials);
    out.push(Check::one("bv-flow", n, move || {
        over_trials(n, |t| {
            let u = fc.universe();
            let gens = gens(&fc);
            let mut rng = stream_n(seed, "bv-flow", t);
            let f = random_poly(u, &mut rng, &gens, deg, 4, Some(1));
            let s = random_poly(u, &mut rng, &gens, deg, 5, None);
            let eps = Poly::var(u, "eps");
            let moved = fc.flow_first_order(&f, &s).map_err(|e| e.to_string())?;
            Ok(&moved - &(&s + &(&eps * &fc.hamlift(&f, &s))))
        })
    }));

    let tc = c.clone();
    out.push(Check::one("qme-tower", n, move || {
        over_trials(n, |t| {
            let u = tc.universe();
            let coords: Vec<u16> = tc.pairs().iter().flat_map(|&(a, b)| [a, b]).collect();
            let mut rng = stream_n(seed, "qme-tower", t);
            let parts: Vec<Poly> = (0..4).map(|_| random_poly(u, &mut rng, &coords, deg, 4, Some(0))).collect();
            let h = Poly::var(u, "hbar");
            let mut s = Poly::zero(u);
            let mut hk = Poly::one(u);
            for p in &parts {
                s += &(&hk * p);
                hk = &hk * &h;
            }
            let orders = tc.qme_orders(&s, 3).map_err(|e| e.to_string())?;
            let tower = tc.qme_tower(&parts, 3);
            Ok(tower.iter().zip(&orders).map(|(a, b)| a - b).find(|d| !d.is_zero()).unwrap_or_else(|| Poly::zero(u)))
        })
    }));
    out
}
