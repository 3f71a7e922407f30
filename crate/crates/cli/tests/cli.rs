use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn superbv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superbv")).args(args).env_remove("SUPERBV_SEED").output().expect("binary runs")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn zeta_report_matches_golden() {
    let o = superbv(&["--suite", "zeta"]);
    assert!(o.status.success());
    let golden = std::fs::read_to_string(data("golden/zeta.json")).unwrap();
    assert_eq!(stdout(&o), golden);
}

#[test]
fn report_schema() {
    let v = json(&superbv(&["--suite", "zeta"]));
    assert_eq!(v["schema"], "superbv-report/1");
    for key in ["suite", "seed", "seed_source", "trials", "max_degree", "truncation", "scenario"] {
        assert!(v["config"].get(key).is_some(), "config.{key}");
    }
    let checks = v["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for c in checks {
        for key in ["name", "suite", "anchor", "residual", "value", "error", "pass", "trials", "wall_time_ms"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
    let l = checks.iter().find(|c| c["name"] == "L(-1)=0").unwrap();
    assert_eq!(l["residual"], "0");
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["pass"], true);
}

#[test]
fn clifford_single_trial() {
    let o = superbv(&["--suite", "clifford", "--trials", "1"]);
    assert!(o.status.success());
    let v = json(&o);
    let rel: Vec<_> = v["checks"].as_array().unwrap().iter().filter(|c| c["name"].as_str().unwrap().starts_with("clifford-relation[")).collect();
    assert_eq!(rel.len(), 100);
    assert!(rel.iter().all(|c| c["residual"] == "0"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["--suite", "superparticle", "--trials", "3", "--seed", "11"];
    let (a, b) = (superbv(&args), superbv(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let md = ["--suite", "descent", "--trials", "1", "--report", "md"];
    assert_eq!(superbv(&md).stdout, superbv(&md).stdout);
}

#[test]
fn seed_from_environment_is_echoed() {
    let o = Command::new(env!("CARGO_BIN_EXE_superbv")).args(["--suite", "zeta"]).env("SUPERBV_SEED", "99").output().unwrap();
    let v = json(&o);
    assert_eq!(v["config"]["seed"], 99);
    assert_eq!(v["config"]["seed_source"], "env:SUPERBV_SEED");
    let o = Command::new(env!("CARGO_BIN_EXE_superbv")).args(["--suite", "zeta", "--seed", "5"]).env("SUPERBV_SEED", "99").output().unwrap();
    assert_eq!(json(&o)["config"]["seed_source"], "flag");
    let o = Command::new(env!("CARGO_BIN_EXE_superbv")).args(["--suite", "zeta"]).env("SUPERBV_SEED", "many").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_file_and_markdown() {
    let dir = std::env::temp_dir().join(format!("superbv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zeta.md");
    let o = superbv(&["--suite", "zeta", "--report", "md", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.contains("| L(-1)=0 | zeta | yes | 1 | `0` |"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn explain_lookups() {
    let cases = [
        ("lemma-eta-k1", "Summing over i, the lemma follows."),
        ("ber-half-mult", "Corollary: the function Ber^{1/2}(A) satisfies Ber^{1/2}(AB) = Ber^{1/2}(A) Ber^{1/2}(B)"),
        ("ms-theorem", "a proper family of Lagrangian submanifolds"),
        ("stokes[d2]", "family:    stokes"),
    ];
    for (name, needle) in cases {
        let o = superbv(&["explain", name]);
        assert!(o.status.success(), "{name}");
        let text = stdout(&o);
        assert!(text.contains(needle), "{name}: {text}");
        assert!(text.contains("formula:") && text.contains("constants:"));
    }
    let o = superbv(&["explain", "no-such-check"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown check"));
}

#[test]
fn usage_errors_exit_nonzero() {
    let o = superbv(&["--suite", "quantum"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite `quantum`"));

    let o = superbv(&["--suite", "descent", "--scenario", "/nonexistent/scenario.kv"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/scenario.kv"));

    let bad = data("data/malformed.kv");
    let o = superbv(&["--suite", "descent", "--scenario", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing `pou.1`"));

    assert_eq!(superbv(&["--report", "xml"]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    let sc = data("data/not_closed.kv");
    let o = superbv(&["--suite", "descent", "--trials", "1", "--scenario", sc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["pass"], false);
    let c = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "observable-closed").unwrap();
    assert_eq!(c["pass"], false);
    assert_ne!(c["residual"], "0");
}

#[test]
fn timings_are_opt_in() {
    let v = json(&superbv(&["--suite", "zeta", "--timings"]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["wall_time_ms"].is_u64()));
}

#[test]
fn three_set_scenario_passes() {
    let sc = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scenarios/three_set.kv");
    let o = superbv(&["--suite", "descent", "--trials", "1", "--scenario", sc.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    let t = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "trace-value").unwrap();
    assert_eq!(t["value"], "2*hbar");
}
