use std::sync::Arc;

use num_traits::{One, Zero};

use super::{first_failure, over_trials, Check, Outcome, SuiteConfig, SuiteError};
use crate::clifford::{
    eta, lc, lemma_lightcone_residual, lemma_universe, light_cone_q, lightcone_projector, Chirality, LcFlow, MinkowskiVector, PMat, QMat,
    SpinorRep, DIM,
};
use crate::random::{small_q, stream_n};
use crate::superpoly::Poly;
use crate::Q;

/// `"0"`, or the first nonzero entry as `(i,j): value`.
fn qmat_outcome(m: &QMat) -> Outcome {
    match m.e.iter().position(|x| !x.is_zero()) {
        None => Outcome::zero(),
        Some(k) => Outcome::Residual(format!("({},{}): {}", k / m.cols, k % m.cols, m.e[k])),
    }
}

fn pmat_outcome(m: &PMat) -> Outcome {
    Outcome::Residual(m.residual_text())
}

fn ch_name(c: Chirality) -> &'static str {
    match c {
        Chirality::Plus => "+",
        Chirality::Minus => "-",
    }
}

pub(super) fn checks(cfg: &SuiteConfig) -> Result<Vec<Check>, SuiteError> {
    let rep = Arc::new(SpinorRep::build().map_err(|e| SuiteError::Internal(e.to_string()))?);
    let mut out = Vec::new();

    let r = rep.clone();
    out.push(Check::many(move || {
        let mut recs = Vec::new();
        for mu in 0..DIM {
            for nu in 0..DIM {
                let ac = r.gamma(mu).mul(r.gamma(nu)).add(&r.gamma(nu).mul(r.gamma(mu)));
                let res = ac.sub(&QMat::identity(32).scale(&Q::from_integer((2 * eta(mu, nu)).into())));
                recs.push((format!("clifford-relation[{mu},{nu}]"), 1, qmat_outcome(&res)));
            }
        }
        recs
    }));

    let r = rep.clone();
    out.push(Check::many(move || {
        let (m, n) = (light_cone_q(1), light_cone_q(-1));
        let (cm, cn) = (r.cl_q(&m), r.cl_q(&n));
        let mut recs = vec![
            ("lightcone-null[m+]".to_string(), 1, qmat_outcome(&cm.mul(&cm))),
            ("lightcone-null[m-]".to_string(), 1, qmat_outcome(&cn.mul(&cn))),
            ("lightcone-pairing".to_string(), 1, qmat_outcome(&cm.mul(&cn).add(&cn.mul(&cm)).add(&QMat::identity(32)))),
        ];
        match lightcone_projector(&r, &m, &n) {
            Ok(p) => {
                recs.push(("projector-idempotent".into(), 1, qmat_outcome(&p.mul(&p).sub(&p))));
                recs.push(("projector-kernel".into(), 1, qmat_outcome(&cm.mul(&p))));
                let rank = p.rank();
                recs.push(("projector-rank".into(), 1, Outcome::holds(rank == 16, || format!("rank {rank}, expected 16"))));
            }
            Err(e) => recs.push(("projector-idempotent".into(), 1, Outcome::Error(e.to_string()))),
        }
        recs
    }));

    let u = lemma_universe();
    for ch in [(Chirality::Plus, Chirality::Plus), (Chirality::Minus, Chirality::Minus), (Chirality::Plus, Chirality::Minus)] {
        let (r, u) = (rep.clone(), u.clone());
        out.push(Check::one(format!("lemma-lightcone[{}{}]", ch_name(ch.0), ch_name(ch.1)), 1, move || {
            let p = MinkowskiVector::new((0..DIM).map(|i| Poly::var(&u, &format!("p{i}"))).collect());
            Outcome::poly(&lemma_lightcone_residual(&r, &u, &p, ch))
        }));
    }
    let (r, seed, n) = (rep.clone(), cfg.seed, cfg.trials);
    out.push(Check::one("lemma-lightcone-points", n, move || {
        over_trials(n, |t| {
            let mut rng = stream_n(seed, "lightcone-points", t);
            let vals: Vec<Q> = (0..DIM).map(|_| small_q(&mut rng)).collect();
            let p = MinkowskiVector::constant(&u, &vals);
            let ch = if t % 2 == 0 { Chirality::Plus } else { Chirality::Minus };
            Ok(lemma_lightcone_residual(&r, &u, &p, (ch, ch)))
        })
    }));

    let flow = Arc::new(LcFlow::new((*rep).clone(), 0));
    let f = flow.clone();
    out.push(Check::many(move || {
        vec![
            ("g-tau-square".to_string(), 1, pmat_outcome(&f.j_square_residual())),
            ("g-tau-group-law".to_string(), 1, pmat_outcome(&f.group_law_residual())),
            ("g-tau-conjugation[m]".to_string(), 1, pmat_outcome(&f.conjugation_residual(1))),
            ("g-tau-conjugation[n]".to_string(), 1, pmat_outcome(&f.conjugation_residual(-1))),
        ]
    }));

    let f = flow.clone();
    out.push(Check::many(move || {
        let u = f.u().clone();
        let at = |v: &MinkowskiVector, c: i64, s: i64| -> Result<Vec<Poly>, String> {
            v.v.iter()
                .map(|x| f.ring.eval(x, &[("c", Q::from_integer(c.into())), ("s", Q::from_integer(s.into()))]).map_err(|e| e.to_string()))
                .collect()
        };
        let diff = |a: Result<Vec<Poly>, String>, b: MinkowskiVector| -> Vec<Result<Poly, String>> {
            match a {
                Ok(a) => a.iter().zip(&b.v).map(|(x, y)| Ok(x - y)).collect(),
                Err(e) => vec![Err(e)],
            }
        };
        let (m, nv) = (f.m_tau(1), f.m_tau(-1));
        let mut ends = diff(at(&m, 1, 0), MinkowskiVector::light_cone(&u, 1));
        ends.extend(diff(at(&m, 0, 1), MinkowskiVector::light_cone(&u, -1)));
        ends.extend(diff(at(&nv, 1, 0), MinkowskiVector::light_cone(&u, -1)));
        ends.extend(diff(at(&nv, 0, 1), MinkowskiVector::light_cone(&u, 1)));
        let null = vec![Ok(m.dot(&m)), Ok(nv.dot(&nv)), Ok(&lc(&m, &nv) - &Poly::constant(&u, Q::new(One::one(), 2.into())))];
        let l_one = match f.l_one_residual() {
            Ok((dm, g)) => {
                let dm = first_failure(dm.into_iter().map(Ok).collect());
                if dm == Outcome::zero() {
                    pmat_outcome(&g)
                } else {
                    dm
                }
            }
            Err(e) => Outcome::Error(e.to_string()),
        };
        vec![
            ("m-tau-endpoints".to_string(), 1, first_failure(ends)),
            ("m-tau-null".to_string(), 1, first_failure(null)),
            ("l-one".to_string(), 1, l_one),
        ]
    }));

    let r = rep.clone();
    out.push(Check::one("lemma-p-plus", 1, move || {
        let f = LcFlow::new((*r).clone(), 1);
        first_failure(f.p_plus_flow_residual().into_iter().map(Ok).collect())
    }));
    Ok(out)
}
