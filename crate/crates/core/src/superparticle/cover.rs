//! The cover `U = U₊ ∪ U₋` of a conic neighbourhood of the forward light
//! cone, and its partition of unity.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use super::ParticleError;
use crate::random::Rng64;
use crate::Q;

/// Rational momentum `(p₀, …, p₉)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentumPoint {
    pub p: Vec<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverMembership {
    pub u: bool,
    pub u_m_plus: bool,
    pub u_m_minus: bool,
    pub u_plus: bool,
    pub u_minus: bool,
    pub u_plus_minus: bool,
}

impl MomentumPoint {
    pub fn new(p: Vec<Q>) -> Self {
        assert_eq!(p.len(), 10);
        MomentumPoint { p }
    }

    pub fn from_ints(p: &[i64]) -> Self {
        Self::new(p.iter().map(|&x| Q::from_integer(x.into())).collect())
    }

    /// `p_*² = p₁² + … + p₈²`.
    pub fn pstar_sq(&self) -> Q {
        self.p[1..9].iter().map(|x| x * x).sum()
    }

    /// `p₁² + … + p₉²`.
    fn spatial_sq(&self) -> Q {
        self.pstar_sq() + &self.p[9] * &self.p[9]
    }

    pub fn membership(&self) -> CoverMembership {
        let (p0, p9) = (&self.p[0], &self.p[9]);
        let half = Q::new(1.into(), 2.into());
        let two = Q::from_integer(2.into());
        let u = p0.is_positive() && self.spatial_sq() > &half * p0 * p0;
        let u_plus = u && *p0 > &two * p9;
        let u_minus = u && *p0 > -(&two * p9);
        CoverMembership {
            u,
            u_m_plus: p0 > p9,
            u_m_minus: *p0 > -p9.clone(),
            u_plus,
            u_minus,
            u_plus_minus: u_plus && u_minus,
        }
    }

    /// At a rational point `(c, s)` of the quarter circle: the lower bound
    /// `½(p₀ - |p₉|)` and whether `p(τ) ≥` that bound holds termwise, which
    /// avoids the irrational `p_*`.
    pub fn p_tau_bound(&self, c: &Q, s: &Q) -> (Q, bool) {
        let (p0, p9) = (&self.p[0], &self.p[9]);
        let half = Q::new(1.into(), 2.into());
        let bound = &half * (p0 - p9.abs());
        let cos = c * c - s * s;
        // 2p(τ) - (p₀ - |p₉|) = (|p₉| - cos p₉) + 2cs p_*
        let ok = (p9.abs() - &cos * p9) >= Q::zero() && (c * s) >= Q::zero() && self.pstar_sq().is_positive();
        (bound, ok)
    }

    /// Seeded point of `U_{+-}`: `|p₉| < p₀/2` and `p₁² + … + p₉² > p₀²/2`.
    pub fn sample_u_plus_minus(rng: &mut Rng64) -> Self {
        loop {
            let p0 = Q::new(rng.gen_range(1..=40).into(), 4.into());
            let mut p = vec![p0.clone()];
            for _ in 1..9 {
                p.push(Q::new(rng.gen_range(-24..=24).into(), 4.into()));
            }
            let lim = rng.gen_range(0..40);
            let p9 = &p0 * Q::new((lim - 20).into(), 41.into());
            p.push(p9);
            let pt = MomentumPoint::new(p);
            if pt.membership().u_plus_minus {
                return pt;
            }
        }
    }

    /// Seeded point of `U`.
    pub fn sample_u(rng: &mut Rng64) -> Self {
        loop {
            let mut p = vec![Q::new(rng.gen_range(1..=40).into(), 4.into())];
            for _ in 1..10 {
                p.push(Q::new(rng.gen_range(-40..=40).into(), 4.into()));
            }
            let pt = MomentumPoint::new(p);
            if pt.membership().u {
                return pt;
            }
        }
    }
}

/// Polynomial ramp: `0` for `t ≤ ¼`, `1` for `t ≥ ¾`, and in between the
/// degree-7 smoothstep of `u = 2(t - ¼)`, so `φ(t) + φ(1 - t) = 1` exactly.
pub fn ramp(t: &Q) -> Q {
    let quarter = Q::new(1.into(), 4.into());
    if *t <= quarter {
        return Q::zero();
    }
    if *t >= Q::new(3.into(), 4.into()) {
        return Q::one();
    }
    let u = Q::from_integer(2.into()) * (t - quarter);
    let q = |n: i64| Q::from_integer(n.into());
    let u4 = u.clone() * &u * &u * &u;
    u4 * (q(35) + u.clone() * (q(-84) + u.clone() * (q(70) + u * q(-20))))
}

/// `(φ₊, φ₋) = (φ(½ - p₉/p₀), φ(½ + p₉/p₀))`.
pub fn partition_phi(pt: &MomentumPoint) -> Result<(Q, Q), ParticleError> {
    if !pt.membership().u {
        return Err(ParticleError::OutsideU(format!("{:?}", pt.p.iter().map(|x| x.to_string()).collect::<Vec<_>>())));
    }
    let half = Q::new(1.into(), 2.into());
    let t = &pt.p[9] / &pt.p[0];
    Ok((ramp(&(&half - &t)), ramp(&(&half + &t))))
}

/// Rational points `((1-t²)/(1+t²), 2t/(1+t²))` of the quarter circle.
pub fn circle_points(k: i64) -> Vec<(Q, Q)> {
    (0..=k)
        .map(|i| {
            let t = Q::new(i.into(), k.into());
            let d = Q::one() + &t * &t;
            ((Q::one() - &t * &t) / &d, Q::from_integer(2.into()) * &t / &d)
        })
        .collect()
}
