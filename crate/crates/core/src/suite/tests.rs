use super::*;

fn failures(r: &Report) -> Vec<String> {
    r.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {:?} {:?}", c.name, c.residual, c.error)).collect()
}

fn run_small(s: Suite, trials: usize) -> Report {
    let r = run(&SuiteConfig::new(s).with_trials(trials)).expect("suite runs");
    assert!(r.pass, "{s}: {:?}", failures(&r));
    assert!(r.checks.iter().all(|c| c.suite == s));
    r
}

#[test]
fn zeta_suite() {
    let r = run_small(Suite::Zeta, 1);
    let l = r.checks.iter().find(|c| c.name == "L(-1)=0").unwrap();
    assert_eq!(l.residual.as_deref(), Some("0"));
    assert_eq!(r.summary.total, 6);
}

#[test]
fn clifford_suite() {
    let r = run_small(Suite::Clifford, 1);
    let rel: Vec<_> = r.checks.iter().filter(|c| c.name.starts_with("clifford-relation[")).collect();
    assert_eq!(rel.len(), 100);
    assert!(rel.iter().all(|c| c.residual.as_deref() == Some("0")));
}

#[test]
fn linalg_bv_simplex_suites() {
    for s in [Suite::Superlinalg, Suite::Bv, Suite::Simplex] {
        run_small(s, 2);
    }
}

#[test]
fn descent_suite() {
    let r = run_small(Suite::Descent, 1);
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    for n in ["lemma-eta-k1", "ms-theorem", "pou-independence", "trace-coboundary[K+1]", "equivariant-closedness[two-generator]"] {
        assert!(names.contains(&n), "{n} missing from {names:?}");
    }
    let trace = r.checks.iter().find(|c| c.name == "trace-value").unwrap();
    assert!(trace.value.is_some() && trace.residual.is_none());
}

#[test]
fn particle_suite() {
    let r = run_small(Suite::Superparticle, 2);
    assert!(r.checks.iter().any(|c| c.name == "lemma-fixed[L(tau),tower-3]"));
}

#[test]
fn seed_precedence() {
    assert_eq!(resolve_seed(Some(5), Some("9")).unwrap(), (5, SeedSource::Flag));
    assert_eq!(resolve_seed(None, Some(" 9 ")).unwrap(), (9, SeedSource::Env(SEED_ENV.into())));
    assert_eq!(resolve_seed(None, None).unwrap(), (DEFAULT_SEED, SeedSource::Default));
    assert!(resolve_seed(None, Some("x")).is_err());
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::MEMBERS.into_iter().chain([Suite::All]) {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("bogus".parse::<Suite>().is_err());
}

#[test]
fn catalog_lookup() {
    assert_eq!(lookup("stokes[d2]").unwrap().name, "stokes");
    assert_eq!(lookup("L(-1)=0").unwrap().suite, Suite::Zeta);
    assert!(lookup("nonsense").is_none());
    assert!(explain("lemma-eta-k1").unwrap().contains("Summing over i, the lemma follows."));
    assert!(explain("ber-half-mult").unwrap().contains("Ber^{1/2}(AB) = Ber^{1/2}(A) Ber^{1/2}(B)"));
    assert!(explain("ms-theorem").unwrap().contains("a proper family of Lagrangian submanifolds"));
    let mut names: Vec<_> = CATALOG.iter().map(|c| c.name).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), CATALOG.len());
}

#[test]
fn markdown_escapes_pipes() {
    let r = run(&SuiteConfig::new(Suite::Zeta)).unwrap();
    let md = r.to_markdown();
    assert!(md.contains("| L(-1)=0 | zeta | yes |"));
    assert!(md.ends_with("6 checks, 6 passed, 0 failed.\n"));
}
