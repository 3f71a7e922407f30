use std::sync::Arc;

use num_traits::{One, Zero};

use super::{over_trials, Check, SuiteConfig};
use crate::random::{random_poly, stream_n};
use crate::simplexforms::{Simplices, SimplicialMap};
use crate::superpoly::Poly;
use crate::Q;

/// Random form of degree `deg` on `Δ^k`: a random coefficient on every
/// increasing `dt`-word of that length.
fn random_form(s: &Simplices, seed: u64, label: &str, t: usize, k: usize, deg: usize, cdeg: usize) -> Poly {
    let words: Vec<Vec<usize>> =
        (0..1usize << k).map(|b| (0..k).filter(|i| b >> i & 1 == 1).collect()).filter(|w: &Vec<usize>| w.len() == deg).collect();
    let mut out = Poly::zero(s.universe());
    for (n, w) in words.iter().enumerate() {
        let mut rng = stream_n(seed, label, 64 * t + n);
        let mut term = random_poly(s.universe(), &mut rng, &s.t_gens()[..k], cdeg, 4, None);
        for &i in w.iter().rev() {
            term = &s.dt(k, i + 1) * &term;
        }
        out += &term;
    }
    out
}

fn binom(n: usize, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, i| acc * Q::from_integer((n - i).into()) / Q::from_integer((i + 1).into()))
}

/// `∫_{t₁+…+t_k ≤ 1} Π t_i^{a_i}` by integrating one variable at a time:
/// the inner integral over `t₂…` on the slice `t₁` is `C (1 - t₁)^m`, and
/// `∫₀¹ t^a (1-t)^m dt` is expanded binomially.
fn iterated_integral(a: &[usize]) -> Q {
    let Some((&first, rest)) = a.split_first() else { return Q::one() };
    let c = iterated_integral(rest);
    let m = rest.iter().sum::<usize>() + rest.len();
    let mut s = Q::zero();
    for j in 0..=m {
        let term = binom(m, j) / Q::from_integer((first + j + 1).into());
        s += if j % 2 == 0 { term } else { -term };
    }
    c * s
}

/// Exponent vectors in `0..=4` on `Δ¹`, `Δ²` and `Δ³`.
fn exponents() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=3u32 {
        for code in 0..5usize.pow(k) {
            out.push((0..k).map(|i| code / 5usize.pow(i) % 5).collect());
        }
    }
    out
}

pub(super) fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    let s = Arc::new(Simplices::standalone(3));
    let (seed, n, deg) = (cfg.seed, cfg.trials, cfg.max_degree);
    let mut out = Vec::new();
    for k in 1..=3 {
        let s = s.clone();
        out.push(Check::one(format!("stokes[d{k}]"), n, move || {
            over_trials(n, |t| s.stokes_residual(k, &random_form(&s, seed, &format!("stokes{k}"), t, k, k - 1, deg)).map_err(|e| e.to_string()))
        }));
    }

    let ds = s.clone();
    out.push(Check::one("derham-squared", n, move || {
        over_trials(n, |t| {
            let w = random_form(&ds, seed, "derham", t, 3, t % 3, deg);
            Ok(ds.derham(&ds.derham(&w)))
        })
    }));

    let ps = s.clone();
    out.push(Check::one("pullback-functorial", n, move || {
        // (mu, nu) with mu: [a] -> [3] and nu: [b] -> [a]
        let maps = [
            (SimplicialMap::coface(3, 1), SimplicialMap::coface(2, 0)),
            (SimplicialMap::coface(3, 2), SimplicialMap::codegeneracy(2, 1)),
            (SimplicialMap::new(vec![0, 0, 2], 3).expect("monotone"), SimplicialMap::codegeneracy(2, 0)),
        ];
        over_trials(n, |t| {
            let (mu, nu) = &maps[t % maps.len()];
            let w = random_form(&ps, seed, "pullback", t, 3, t % 2 + 1, deg);
            let pb = |m: &SimplicialMap, w: &Poly| ps.pullback(m, w).map_err(|e| e.to_string());
            let comp = &pb(&mu.compose(nu), &w)? - &pb(nu, &pb(mu, &w)?)?;
            if !comp.is_zero() {
                return Ok(comp);
            }
            Ok(&pb(mu, &ps.derham(&w))? - &ps.derham(&pb(mu, &w)?))
        })
    }));

    let is = s.clone();
    let exps = exponents();
    out.push(Check::one("dirichlet-integral", exps.len(), move || {
        over_trials(exps.len(), |i| {
            let a = &exps[i];
            let k = a.len();
            let mut w = Poly::one(is.universe());
            for j in 1..=k {
                w = &w * &is.dt(k, j);
            }
            for (j, &e) in a.iter().enumerate() {
                w = &w * &is.t(k, j + 1).pow(e as u32);
            }
            Ok(&is.integrate(k, &w) - &Poly::constant(is.universe(), iterated_integral(a)))
        })
    }));
    out
}
