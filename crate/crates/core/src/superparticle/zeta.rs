//! Bernoulli polynomials, Hurwitz zeta at non-positive integers, and the
//! Dirichlet L-function of the character mod 4.

use num_traits::{One, Zero};

use super::ParticleError;
use crate::Q;

/// Coefficients of `B_n(a)`, lowest degree first, from `B₀ = 1`,
/// `B_n' = nB_{n-1}` and `∫₀¹ B_n = 0`.
pub fn bernoulli(n: usize) -> Vec<Q> {
    let mut b = vec![Q::one()];
    for k in 1..=n {
        let mut next = vec![Q::zero(); k + 1];
        for (i, c) in b.iter().enumerate() {
            next[i + 1] = c * Q::from_integer((k as i64).into()) / Q::from_integer((i as i64 + 1).into());
        }
        let integral: Q = next.iter().enumerate().map(|(i, c)| c / Q::from_integer((i as i64 + 1).into())).sum();
        next[0] = -integral;
        b = next;
    }
    b
}

pub fn eval(poly: &[Q], a: &Q) -> Q {
    poly.iter().rev().fold(Q::zero(), |acc, c| acc * a + c)
}

/// `ζ(1-n, a) = -B_n(a)/n`.
pub fn hurwitz_neg(n: usize, a: &Q) -> Result<Q, ParticleError> {
    if n == 0 {
        return Err(ParticleError::Zeta("ζ(1, a) is the pole".into()));
    }
    Ok(-eval(&bernoulli(n), a) / Q::from_integer((n as i64).into()))
}

/// `L(1-n) = 4^{n-1}(ζ(1-n, ¼) - ζ(1-n, ¾))` for `L(s) = 1 - 3^{-s} + 5^{-s} - …`.
pub fn dirichlet_l_neg(n: usize) -> Result<Q, ParticleError> {
    let q = Q::new(1.into(), 4.into());
    let diff = hurwitz_neg(n, &q)? - hurwitz_neg(n, &(Q::one() - &q))?;
    Ok(diff * Q::from_integer(4.into()).pow(n as i32 - 1))
}

/// `L(-1)`.
pub fn dirichlet_l_minus_one() -> Q {
    dirichlet_l_neg(2).expect("n = 2 is regular")
}
