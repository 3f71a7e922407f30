//! Key-value scenario files for descent experiments.
//!
//! ```text
//! # comment
//! pairs = 2                 # Darboux pairs (x_a even, xi_a odd)
//! opens = 2                 # cover size
//! truncation = 3            # K
//! seed = 7
//! basepoint = 0, 0          # x0 normalizing eta
//! pou.0 = 1/2 + x1          # one line per open set; must sum to 1
//! pou.1 = 1/2 - x1
//! pou_alt.0 = 1/3 - x2      # optional second partition; enables the pou-independence check
//! pou_alt.1 = 2/3 + x2
//! psi.0 = lam1*x1*x2        # odd gauge fermion per open set, L_a = graph of dpsi
//! psi.1 = lam2*x2
//! observable = x1^2 + lam1*x2     # Delta-closed half-form, the same on every component
//! coboundary = 4            # number of random templates for tau in Z((delta + hbar Delta) tau)
//! ```
//!
//! Polynomials are written in the generators `hbar`, `lam1..lam4`, `x{a}` and
//! `xi{a}`. With `pou_alt` present the runner interpolates
//! `s1 pou + (1 - s1) pou_alt` over an auxiliary interval.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{CechModel, DescentError, DescentSpace, FamilySet, SpaceConfig, Template, TwCochain};
use crate::superpoly::Poly;
use crate::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub pairs: usize,
    pub opens: usize,
    pub truncation: usize,
    pub seed: u64,
    pub basepoint: Vec<Q>,
    pub pou: Vec<String>,
    pub pou_alt: Option<Vec<String>>,
    pub psi: Vec<String>,
    pub observable: String,
    pub coboundary: usize,
}

/// One named result; `Err` when the check could not be evaluated.
#[derive(Clone, Debug)]
pub struct ScenarioCheck {
    pub name: String,
    pub value: Result<Poly, DescentError>,
    /// Residuals must vanish; other entries (the trace itself) are reported as values.
    pub residual: bool,
}

fn check(name: impl Into<String>, value: Result<Poly, DescentError>) -> ScenarioCheck {
    ScenarioCheck { name: name.into(), value, residual: true }
}

fn bad(msg: impl Into<String>) -> DescentError {
    DescentError::Scenario(msg.into())
}

fn parse_q(s: &str) -> Result<Q, DescentError> {
    let s = s.trim();
    let r = match s.split_once('/') {
        Some((n, d)) => n.trim().parse::<i64>().ok().zip(d.trim().parse::<i64>().ok()).filter(|&(_, d)| d != 0).map(|(n, d)| Q::new(n.into(), d.into())),
        None => s.parse::<i64>().ok().map(|n| Q::from_integer(n.into())),
    };
    r.ok_or_else(|| bad(format!("not a rational: `{s}`")))
}

fn indexed(map: &BTreeMap<String, String>, prefix: &str, n: usize) -> Result<Option<Vec<String>>, DescentError> {
    let found: Vec<_> = (0..n).map(|i| map.get(&format!("{prefix}.{i}")).cloned()).collect();
    if found.iter().all(Option::is_none) {
        return Ok(None);
    }
    found
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| bad(format!("missing `{prefix}.{i}`"))))
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, DescentError> {
        let mut map = BTreeMap::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| bad(format!("line {}: expected `key = value`", ln + 1)))?;
            if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(bad(format!("line {}: duplicate key `{}`", ln + 1, k.trim())));
            }
        }
        let num = |key: &str, default: Option<usize>| -> Result<usize, DescentError> {
            match map.get(key) {
                Some(v) => v.parse().map_err(|_| bad(format!("`{key}` must be a non-negative integer"))),
                None => default.ok_or_else(|| bad(format!("missing `{key}`"))),
            }
        };
        let pairs = num("pairs", None)?;
        let opens = num("opens", None)?;
        if pairs == 0 || opens == 0 {
            return Err(bad("`pairs` and `opens` must be positive"));
        }
        let truncation = num("truncation", Some(3))?;
        let coboundary = num("coboundary", Some(0))?;
        let seed = match map.get("seed") {
            Some(v) => v.parse().map_err(|_| bad("`seed` must be a 64-bit integer"))?,
            None => 0,
        };
        let basepoint = match map.get("basepoint") {
            Some(v) => v.split(',').map(parse_q).collect::<Result<Vec<_>, _>>()?,
            None => vec![Q::zero(); pairs],
        };
        if basepoint.len() != pairs {
            return Err(bad(format!("basepoint has {} entries for {} pairs", basepoint.len(), pairs)));
        }
        let pou = indexed(&map, "pou", opens)?.ok_or_else(|| bad("missing `pou.*`"))?;
        let psi = indexed(&map, "psi", opens)?.ok_or_else(|| bad("missing `psi.*`"))?;
        let pou_alt = indexed(&map, "pou_alt", opens)?;
        let known = |k: &str| {
            ["pairs", "opens", "truncation", "seed", "basepoint", "observable", "coboundary"].contains(&k)
                || ["pou.", "pou_alt.", "psi."].iter().any(|p| k.strip_prefix(p).and_then(|i| i.parse::<usize>().ok()).is_some_and(|i| i < opens))
        };
        if let Some(k) = map.keys().find(|k| !known(k)) {
            return Err(bad(format!("unknown key `{k}`")));
        }
        Ok(Scenario {
            pairs,
            opens,
            truncation,
            seed,
            basepoint,
            pou,
            pou_alt,
            psi,
            observable: map.get("observable").cloned().unwrap_or_else(|| "1".into()),
            coboundary,
        })
    }

    pub fn space(&self) -> Arc<DescentSpace> {
        let mut c = SpaceConfig::new(self.pairs, self.truncation + 2);
        c.aux = usize::from(self.pou_alt.is_some());
        DescentSpace::new(c)
    }

    fn polys(&self, space: &DescentSpace, texts: &[String], what: &str) -> Result<Vec<Poly>, DescentError> {
        texts
            .iter()
            .enumerate()
            .map(|(i, t)| space.parse(t).map_err(|e| bad(format!("{what}.{i}: {e}"))))
            .collect()
    }

    /// Evaluates every check the scenario supports, in a fixed order.
    pub fn run(&self, truncation: Option<usize>) -> Result<Vec<ScenarioCheck>, DescentError> {
        let k = truncation.unwrap_or(self.truncation);
        let sc = Scenario { truncation: k, ..self.clone() };
        let space = sc.space();
        let levels = k + 2;
        let pou = self.polys(&space, &self.pou, "pou")?;
        let psi = self.polys(&space, &self.psi, "psi")?;
        let obs = space.parse(&self.observable).map_err(|e| bad(format!("observable: {e}")))?;
        let model = CechModel::new(&space, pou.clone(), k)?;
        let fams = FamilySet::barycentric(&space, &psi, levels, &self.basepoint)?;
        let mut out: Vec<ScenarioCheck> = Vec::new();

        out.push(check("families-compatible", fams.check_compatible(&space).map(|_| Poly::zero(space.universe()))));

        let u = space.universe();
        let gens: Vec<u16> = space.xs().into_iter().chain(space.xis()).chain(space.lams[..2].iter().copied()).collect();
        let shapes = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (2, 1)];
        let templates: Vec<Template> = (0..self.coboundary)
            .map(|i| {
                let (a, b) = shapes[i % shapes.len()];
                Template::random(&space, self.seed, &format!("scenario-tau{i}"), a, b, gens.clone(), 3, 4)
            })
            .collect();
        let tau = TwCochain::from_templates(&space, self.opens, levels, &templates);

        for kk in 0..=1.min(k) {
            let mut r = Poly::zero(u);
            for seq in model.sequences(kk) {
                r += &model.lemma_eta_residual(&seq, tau.component(&seq)?)?;
                r += &model.lemma_eta_residual(&seq, &obs)?;
            }
            out.push(check(format!("lemma-eta-k{kk}"), Ok(r)));
        }

        let mut ms = Poly::zero(u);
        for seq in model.sequences(1) {
            ms += &super::ms_residual(&space, fams.get(&seq)?, tau.component(&seq)?)?;
        }
        out.push(check("ms-theorem", Ok(ms)));

        let obs_tw = TwCochain::from_templates(&space, self.opens, levels, &[Template::constant(obs.clone())]);
        let closed = space.chart.delta(&obs);
        out.push(check("observable-closed", Ok(closed)));
        let z = model.trace(&fams, &obs_tw);
        out.push(ScenarioCheck { name: "trace-value".into(), value: z.map(|z| z.value), residual: false });

        if self.coboundary > 0 {
            let d_tau = tau.map(|c| space.d_total(c));
            out.push(check("truncation-soundness", model.truncation_check(&d_tau).map(|_| Poly::zero(u))));
            out.push(check("trace-coboundary", model.trace(&fams, &d_tau).map(|z| z.value)));
        }

        if let Some(alt) = &self.pou_alt {
            let alt = self.polys(&space, alt, "pou_alt")?;
            let s1 = Poly::gen(u, space.aux.t_gens()[0]);
            let one_minus = &Poly::one(u) - &s1;
            let interp: Vec<Poly> = pou.iter().zip(&alt).map(|(a, b)| &(&s1 * a) + &(&one_minus * b)).collect();
            let pm = CechModel::new(&space, interp, k)?;
            out.push(check("pou-independence", pm.pou_independence_residual(&fams, &obs_tw)));
        }
        Ok(out)
    }
}
