use std::sync::Arc;

use super::{over_trials, Check, SuiteConfig};
use crate::random::stream_n;
use crate::superlinalg::{
    ber_half, berezinian, berezinian_dual, odd_constant_universe, pidual, quadric_residuals, random_even_matrix, random_quadric,
    supertranspose, OddSymplecticForm, SuperDimension, SuperMatrix,
};
use crate::superpoly::Poly;
use crate::Universe;

type Pair = (SuperMatrix, SuperMatrix);

/// First nonzero entry of a residual matrix.
fn entry_residual(m: &SuperMatrix) -> Poly {
    m.e.iter().flatten().find(|p| !p.is_zero()).cloned().unwrap_or_else(|| Poly::zero(m.universe()))
}

/// Trial `i` uses dimension `2|2` or `3|2` alternately.
fn even_pair(u: &Arc<Universe>, seed: u64, i: usize) -> Pair {
    let dims = [SuperDimension::new(2, 2), SuperDimension::new(3, 2)][i % 2];
    let mut rng = stream_n(seed, "ber-pair", i);
    (random_even_matrix(u, &mut rng, dims), random_even_matrix(u, &mut rng, dims))
}

/// Quadric elements on `2|2` or `3|3` alternately, each a product of four factors.
fn quadric_pair(u: &Arc<Universe>, seed: u64, i: usize) -> Result<(Pair, OddSymplecticForm), String> {
    let n = 2 + i % 2;
    let mut rng = stream_n(seed, "quadric-pair", i);
    let a = random_quadric(u, &mut rng, n, 4).map_err(|e| e.to_string())?;
    let b = random_quadric(u, &mut rng, n, 4).map_err(|e| e.to_string())?;
    Ok(((a, b), OddSymplecticForm::new(n)))
}

fn ber(a: &SuperMatrix) -> Result<Poly, String> {
    berezinian(a).map_err(|e| e.to_string())
}

fn mul(a: &SuperMatrix, b: &SuperMatrix) -> Result<SuperMatrix, String> {
    a.mul(b).map_err(|e| e.to_string())
}

fn even_check<F>(name: &str, u: &Arc<Universe>, seed: u64, n: usize, f: F) -> Check
where
    F: Fn(&Pair) -> Result<Poly, String> + Send + Sync + 'static,
{
    let u = u.clone();
    Check::one(name, 2 * n, move || over_trials(2 * n, |i| f(&even_pair(&u, seed, i))))
}

fn quadric_check<F>(name: &str, u: &Arc<Universe>, seed: u64, n: usize, f: F) -> Check
where
    F: Fn(&Pair, &OddSymplecticForm) -> Result<Poly, String> + Send + Sync + 'static,
{
    let u = u.clone();
    Check::one(name, n, move || {
        over_trials(n, |i| {
            let (pair, w) = quadric_pair(&u, seed, i)?;
            f(&pair, &w)
        })
    })
}

pub(super) fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    let u = odd_constant_universe(6);
    let (seed, n) = (cfg.seed, cfg.trials);
    let half = |a: &SuperMatrix, w: &OddSymplecticForm| ber_half(a, w).map_err(|e| e.to_string());
    vec![
        even_check("ber-mult", &u, seed, n, |(a, b)| Ok(&ber(&mul(a, b)?)? - &(&ber(a)? * &ber(b)?))),
        even_check("ber-dual", &u, seed, n, |(a, _)| Ok(&ber(a)? - &berezinian_dual(a).map_err(|e| e.to_string())?)),
        even_check("ber-supertranspose", &u, seed, n, |(a, _)| Ok(&ber(&supertranspose(a))? - &ber(a)?)),
        even_check("ber-pidual", &u, seed, n, |(a, _)| Ok(&(&ber(&pidual(a))? * &ber(a)?) - &Poly::one(a.universe()))),
        quadric_check("quadric-closed", &u, seed, n, |(a, b), w| {
            let res = quadric_residuals(&mul(a, b)?, w).map_err(|e| e.to_string())?;
            Ok(res.iter().map(entry_residual).find(|p| !p.is_zero()).unwrap_or_else(|| Poly::zero(a.universe())))
        }),
        quadric_check("ber-half-square", &u, seed, n, move |(a, _), w| {
            let h = half(a, w)?;
            Ok(&ber(a)? - &(&h * &h))
        }),
        quadric_check("ber-half-mult", &u, seed, n, move |(a, b), w| Ok(&half(&mul(a, b)?, w)? - &(&half(a, w)? * &half(b, w)?))),
    ]
}
