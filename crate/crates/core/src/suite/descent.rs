use std::sync::Arc;

use super::{first_failure, over_trials, Check, Outcome, SuiteConfig, SuiteError};
use crate::descent::examples::{field_gens, interpolated, lie_space, psis, random_sigma, random_tau, space, three_set, two_dim, two_set, zeros};
use crate::descent::scenario::{Scenario, ScenarioCheck};
use crate::descent::{compute_eta, ms_residual, CechModel, FamilySet, LagrangianFamily, LieSuperAlgebra, MomentMap, Template, TwCochain};
use crate::random::{random_graded, random_poly, stream_n};
use crate::superpoly::Poly;

/// Scenario used when no file is given.
pub const DEFAULT_SCENARIO: &str = include_str!("../../../../scenarios/two_set.kv");

fn outcome(c: ScenarioCheck) -> Outcome {
    match (c.value, c.residual) {
        (Err(e), _) => Outcome::Error(e.to_string()),
        (Ok(p), true) => Outcome::poly(&p),
        (Ok(p), false) => Outcome::Value(p.canonical().to_text()),
    }
}

fn scenario_checks(cfg: &SuiteConfig) -> Result<Vec<Check>, SuiteError> {
    let text = match &cfg.scenario {
        Some(path) => std::fs::read_to_string(path).map_err(|e| SuiteError::Scenario(format!("{}: {e}", path.display())))?,
        None => DEFAULT_SCENARIO.to_string(),
    };
    let where_ = cfg.scenario.as_ref().map_or("(bundled)".to_string(), |p| p.display().to_string());
    let sc = Scenario::parse(&text).map_err(|e| SuiteError::Scenario(format!("{where_}: {e}")))?;
    let k = cfg.truncation.unwrap_or(sc.truncation);
    let mut out = Vec::new();
    let sc_k = sc.clone();
    out.push(Check::many(move || match sc_k.run(Some(k)) {
        Ok(cs) => cs.into_iter().map(|c| (c.name.clone(), 1, outcome(c))).collect(),
        Err(e) => vec![("scenario-run".into(), 1, Outcome::Error(e.to_string()))],
    }));
    if sc.coboundary > 0 {
        // the next truncation level must give the same trace
        out.push(Check::many(move || match sc.run(Some(k + 1)) {
            Ok(cs) => cs
                .into_iter()
                .filter(|c| c.name == "truncation-soundness" || c.name == "trace-coboundary")
                .map(|c| (format!("{}[K+1]", c.name), 1, outcome(c)))
                .collect(),
            Err(e) => vec![("scenario-run[K+1]".into(), 1, Outcome::Error(e.to_string()))],
        }));
    }
    Ok(out)
}

fn lemma_eta(name: &str, model: Arc<CechModel>, seed: u64, deg: usize, parametrized: bool) -> Check {
    let seqs: Vec<(usize, Vec<usize>)> = (0..=2).flat_map(|k| model.sequences(k).into_iter().map(move |s| (k, s))).collect();
    let n = seqs.len();
    Check::one(format!("lemma-eta[{name}]"), n, move || {
        let s = model.space.clone();
        over_trials(n, |i| {
            let (k, seq) = &seqs[i];
            let mut sigma = random_sigma(&s, seed, i, *k, deg);
            if parametrized {
                let extra = s.parse("s1 + ds1*xi2").map_err(|e| e.to_string())?;
                sigma += &(&extra * &random_sigma(&s, seed ^ 1, i, 0, deg));
            }
            model.lemma_eta_residual(seq, &sigma).map_err(|e| e.to_string())
        })
    })
}

fn ms_random(k: usize, n: usize, seed: u64, deg: usize) -> Check {
    Check::one(format!("ms-theorem[d{k}]"), n, move || {
        let s = space(2, 3, 0);
        over_trials(n, |t| {
            let mut rng = stream_n(seed, &format!("ms-family-d{k}"), t);
            let mut gens = s.xs();
            gens.extend(&s.simp.t_gens()[..k]);
            gens.extend(&s.lams[..3]);
            let psi = random_graded(s.universe(), &mut rng, &gens, 3, 6, 1, 0);
            let mut fam = LagrangianFamily::from_generating(&s, k, &psi);
            fam.eta = Some(compute_eta(&s, &fam, &zeros(2)).map_err(|e| e.to_string())?);
            let sigma = random_sigma(&s, seed ^ (k as u64 + 2), t, k, deg.min(3));
            ms_residual(&s, &fam, &sigma).map_err(|e| e.to_string())
        })
    })
}

fn equivariance(cfg: &SuiteConfig) -> Vec<Check> {
    let (seed, n, deg) = (cfg.seed, cfg.trials, cfg.max_degree);
    let mut out = Vec::new();
    out.push(Check::one("maurer-cartan[abelian]", 1, || {
        let s = lie_space(vec![0], 1, 1);
        let g = LieSuperAlgebra::abelian(vec![0]);
        match s.parse("xi1").map_err(|e| e.to_string()).and_then(|r| MomentMap::new(&g, vec![r]).map_err(|e| e.to_string())) {
            Ok(rho) => Outcome::poly(&rho.mc_residual(&s, &g)),
            Err(e) => Outcome::Error(e),
        }
    }));
    out.push(Check::one("maurer-cartan[two-generator]", 1, || {
        let s = lie_space(vec![0, 0], 1, 1);
        let g = two_dim();
        let rho = ["x1*xi1", "xi1"]
            .iter()
            .map(|t| s.parse(t).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .and_then(|r| MomentMap::new(&g, r).map_err(|e| e.to_string()));
        match rho {
            Ok(rho) => {
                let mut all: Vec<Result<Poly, String>> = rho.morphism_residuals(&s, &g).into_iter().map(|(_, r)| Ok(r)).collect();
                all.push(Ok(rho.mc_residual(&s, &g)));
                first_failure(all)
            }
            Err(e) => Outcome::Error(e),
        }
    }));
    out.push(Check::one("conjugation-identity", n, move || {
        let s = lie_space(vec![0, 0], 2, 1);
        let g = two_dim();
        let rho = match MomentMap::new(&g, vec![s.parse("x1*xi1").expect("rho"), s.parse("xi1").expect("rho")]) {
            Ok(r) => r,
            Err(e) => return Outcome::Error(e.to_string()),
        };
        over_trials(n, |t| {
            let mut rng = stream_n(seed, "conjugation", t);
            let mut gens = field_gens(&s);
            gens.extend(&s.eps);
            let sigma = random_poly(s.universe(), &mut rng, &gens, deg.min(3), 5, None);
            rho.conjugation_residual(&s, &g, &sigma).map_err(|e| e.to_string())
        })
    }));
    for (name, dim) in [("abelian", 1usize), ("two-generator", 2)] {
        out.push(Check::one(format!("equivariant-closedness[{name}]"), 1, move || {
            let (g, rho_txt) = if dim == 1 { (LieSuperAlgebra::abelian(vec![0]), vec!["xi1"]) } else { (two_dim(), vec!["x1*xi1", "xi1"]) };
            let s = lie_space(g.parities.clone(), 2, 5);
            let run = || -> Result<Poly, String> {
                let m = two_set(&s, 3);
                let fams = FamilySet::barycentric(&s, &psis(&s), 5, &zeros(2)).map_err(|e| e.to_string())?;
                let rho = MomentMap::new(&g, rho_txt.iter().map(|t| s.parse(t).expect("rho")).collect()).map_err(|e| e.to_string())?;
                let mut tau = random_tau(&s, 2, 5, seed);
                tau = tau.add(&TwCochain::from_templates(&s, 2, 5, &[Template::constant(s.parse("e1*xi2*x1").expect("template"))]));
                m.equivariant_closedness(&fams, &tau, &g, &rho).map_err(|e| e.to_string())
            };
            match run() {
                Ok(p) => Outcome::poly(&p),
                Err(e) => Outcome::Error(e),
            }
        }));
    }
    out
}

pub(super) fn checks(cfg: &SuiteConfig) -> Result<Vec<Check>, SuiteError> {
    let mut out = scenario_checks(cfg)?;
    let (seed, deg, n) = (cfg.seed, cfg.max_degree, cfg.trials);
    let plain = space(2, 4, 0);
    out.push(lemma_eta("two-set", Arc::new(two_set(&plain, 3)), seed, deg, false));
    out.push(lemma_eta("three-set", Arc::new(three_set(&plain, 3)), seed, deg, false));
    out.push(lemma_eta("parametrized", Arc::new(interpolated(&space(2, 4, 1), 3)), seed, deg, true));
    out.push(ms_random(1, n, seed, deg));
    out.push(ms_random(2, n.div_ceil(4), seed, deg));
    out.extend(equivariance(cfg));
    Ok(out)
}
