use std::sync::Arc;

use num_traits::{One, Zero};

use super::{first_failure, Check, Outcome, SuiteConfig, SuiteError};
use crate::random::stream_n;
use crate::superparticle::{circle_points, partition_phi, Gauge, MomentumPoint, Particle, Shell, Term};
use crate::Q;

/// Highest tower level checked.
pub const NMAX: usize = 3;

fn err(e: impl std::fmt::Display) -> Outcome {
    Outcome::Error(e.to_string())
}

fn terms() -> Vec<Term> {
    let mut t = vec![Term::S0, Term::Kinetic];
    t.extend((0..=NMAX).map(Term::Tower));
    t
}

fn cover_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let (seed, n) = (cfg.seed, cfg.trials);
    vec![
        Check::one("cover-membership", n, move || {
            for t in 0..n {
                let pt = MomentumPoint::sample_u(&mut stream_n(seed, "cover", t));
                let m = pt.membership();
                let ok = (m.u_plus || m.u_minus) && (!m.u_plus || m.u_m_plus) && (!m.u_minus || m.u_m_minus);
                if !ok {
                    return Outcome::Residual(format!("point {t}: {m:?}"));
                }
            }
            Outcome::zero()
        }),
        Check::one("p-tau-positivity", n, move || {
            let quarter = Q::new(1.into(), 4.into());
            let circle = circle_points(6);
            for t in 0..n {
                let pt = MomentumPoint::sample_u_plus_minus(&mut stream_n(seed, "positivity", t));
                if pt.pstar_sq() <= &quarter * &pt.p[0] * &pt.p[0] {
                    return Outcome::Residual(format!("point {t}: p_*^2 <= p_0^2/4"));
                }
                for (c, s) in &circle {
                    let (bound, ok) = pt.p_tau_bound(c, s);
                    if !(ok && bound > Q::zero()) {
                        return Outcome::Residual(format!("point {t}, (c,s) = ({c},{s}): p(tau) bound fails"));
                    }
                }
            }
            Outcome::zero()
        }),
        Check::one("partition-of-unity", n, move || {
            for t in 0..n {
                let pt = MomentumPoint::sample_u(&mut stream_n(seed, "partition", t));
                let (a, b) = match partition_phi(&pt) {
                    Ok(v) => v,
                    Err(e) => return err(e),
                };
                let sum = &a + &b - Q::one();
                if !sum.is_zero() {
                    return Outcome::Residual(sum.to_string());
                }
                let m = pt.membership();
                if !(a.is_zero() || m.u_plus) || !(b.is_zero() || m.u_minus) {
                    return Outcome::Residual(format!("point {t}: support outside U+/U-"));
                }
            }
            Outcome::zero()
        }),
    ]
}

pub(super) fn checks(cfg: &SuiteConfig) -> Result<Vec<Check>, SuiteError> {
    let p = Arc::new(Particle::new(NMAX).map_err(|e| SuiteError::Internal(e.to_string()))?);
    let mut out = Vec::new();
    for gauge in Gauge::ALL {
        let shell = if gauge == Gauge::Tau { Shell::Momentum } else { Shell::Off };
        for term in terms() {
            let p = p.clone();
            out.push(Check::one(format!("lemma-fixed[{},{}]", gauge.name(), term.name()), 1, move || match p.lemma_fixed(term, gauge, shell) {
                Ok(c) => Outcome::poly(&c.residual),
                Err(e) => err(e),
            }));
        }
        let pf = p.clone();
        out.push(Check::one(format!("free-action[{}]", gauge.name()), 1, move || match pf.free_action_residual(gauge) {
            Ok(r) => Outcome::poly(&r),
            Err(e) => err(e),
        }));
        let pm = p.clone();
        out.push(Check::many(move || match pm.moment_restrictions(gauge) {
            Ok(recs) => recs.into_iter().map(|r| (format!("moment[{},{}]", gauge.name(), r.name), 1, Outcome::poly(&r.residual))).collect(),
            Err(e) => vec![(format!("moment[{}]", gauge.name()), 1, err(e))],
        }));
    }
    let pt = p.clone();
    out.push(Check::one("tau-independence", 1, move || match pt.tau_independence_residual() {
        Ok(r) => Outcome::poly(&r),
        Err(e) => err(e),
    }));
    let pe = p.clone();
    out.push(Check::one("eta-plus-minus", NMAX + 2, move || {
        let mut all = vec![Ok(pe.eta_plus_minus(None))];
        all.extend((0..=NMAX).map(|n| pe.eta_residual(Some(n)).map_err(|e| e.to_string())));
        first_failure(all)
    }));
    let pw = p.clone();
    out.push(Check::one("berezinian-weights", NMAX + 1, move || {
        for (n, w) in pw.berezinian_weights().iter().enumerate() {
            let k = 2 * n as i64 + 1;
            let want = Q::from_integer((if n % 2 == 0 { -k } else { k }).into());
            if *w != want {
                return Outcome::Residual((w - want).to_string());
            }
        }
        Outcome::zero()
    }));
    out.extend(cover_checks(cfg));
    Ok(out)
}
