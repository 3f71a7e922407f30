use num_traits::{One, Zero};

use super::{Check, Outcome, SuiteConfig};
use crate::superparticle::zeta::{bernoulli, dirichlet_l_minus_one, dirichlet_l_neg, hurwitz_neg};
use crate::Q;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn rational(r: Q) -> Outcome {
    if r.is_zero() {
        Outcome::zero()
    } else {
        Outcome::Residual(r.to_string())
    }
}

/// First nonzero coefficient of `a - b`, as `a^k: value`.
fn coeff_diff(a: &[Q], b: &[Q]) -> Outcome {
    let n = a.len().max(b.len());
    let zero = Q::zero();
    for k in 0..n {
        let d = a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero);
        if !d.is_zero() {
            return Outcome::Residual(format!("a^{k}: {d}"));
        }
    }
    Outcome::zero()
}

/// Coefficients of `P(1 - a)`, expanding `(1 - a)^k` binomially.
fn reflect(p: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); p.len()];
    for (k, c) in p.iter().enumerate() {
        let mut binom = Q::one();
        for j in 0..=k {
            let term = c * &binom;
            out[j] += if j % 2 == 0 { term } else { -term };
            binom = binom * Q::from_integer(((k - j) as i64).into()) / Q::from_integer(((j + 1) as i64).into());
        }
    }
    out
}

/// Bernoulli numbers from `Σ_{k ≤ m} C(m+1, k) B_k = 0`.
fn bernoulli_numbers(n: usize) -> Vec<Q> {
    let mut b = vec![Q::one()];
    for m in 1..=n {
        let mut s = Q::zero();
        let mut binom = Q::one();
        for (k, bk) in b.iter().enumerate() {
            s += &binom * bk;
            binom = binom * Q::from_integer(((m + 1 - k) as i64).into()) / Q::from_integer(((k + 1) as i64).into());
        }
        b.push(-s / Q::from_integer(((m + 1) as i64).into()));
    }
    b
}

pub(super) fn checks(_cfg: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::one("bernoulli-b2", 1, || coeff_diff(&bernoulli(2), &[q(1, 6), q(-1, 1), q(1, 1)])),
        Check::one("bernoulli-reflection", 13, || {
            for n in 0..=12 {
                let b = bernoulli(n);
                let sign = if n % 2 == 0 { Q::one() } else { -Q::one() };
                let want: Vec<Q> = b.iter().map(|c| c * &sign).collect();
                let r = coeff_diff(&reflect(&b), &want);
                if r != Outcome::zero() {
                    return r;
                }
            }
            Outcome::zero()
        }),
        Check::one("bernoulli-numbers", 13, || {
            let nums = bernoulli_numbers(12);
            for (n, want) in nums.iter().enumerate() {
                let d = &bernoulli(n)[0] - want;
                if !d.is_zero() {
                    return Outcome::Residual(format!("B_{n}: {d}"));
                }
            }
            Outcome::zero()
        }),
        Check::one("zeta(-1,1)=-1/12", 1, || match hurwitz_neg(2, &Q::one()) {
            Ok(v) => rational(v + q(1, 12)),
            Err(e) => Outcome::Error(e.to_string()),
        }),
        Check::one("L(-1)=0", 1, || rational(dirichlet_l_minus_one())),
        Check::one("L(-2k)=E_2k/2", 5, || {
            // Euler numbers E_0 … E_8
            for (k, e) in [1i64, -1, 5, -61, 1385].iter().enumerate() {
                match dirichlet_l_neg(2 * k + 1) {
                    Ok(v) if v != q(*e, 2) => return Outcome::Residual(format!("L(-{}): {}", 2 * k, v - q(*e, 2))),
                    Err(e) => return Outcome::Error(e.to_string()),
                    _ => {}
                }
            }
            Outcome::zero()
        }),
    ]
}
