use std::path::PathBuf;
use std::process::{Command, Output};

use tdeform::cli::{example, run, RunConfig, EXAMPLE_NAMES};
use tdeform::rewrite::PresentationStatus;
use tdeform::scalars::Scalar;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdeform")).args(args).output().unwrap()
}

fn configs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tdeform-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn config_round_trip() {
    for name in EXAMPLE_NAMES {
        let cfg = example(name, None).unwrap().config;
        assert_eq!(RunConfig::from_json(&cfg.to_json()).unwrap(), cfg, "{name}");
    }
    for name in ["cc.json", "m2.json", "wemyss.json"] {
        let text = std::fs::read_to_string(configs_dir().join(name)).unwrap();
        let cfg = RunConfig::from_json(&text).unwrap();
        assert_eq!(RunConfig::from_json(&cfg.to_json()).unwrap(), cfg, "{name}");
    }
}

#[test]
fn catalog_reproduces_expected_summaries() {
    for name in EXAMPLE_NAMES {
        let entry = example(name, None).unwrap();
        let out = run(&entry.config, None).unwrap();
        let r = &out.report;
        assert_eq!(r.graded_basis.n, entry.expected.n, "{name}");
        let relations_pass = r.verifications.relation_classes.iter().all(|c| c.vanishes)
            && r.verifications.presentations.iter().all(|p| p.status == PresentationStatus::Pass);
        assert_eq!(relations_pass, entry.expected.relations_pass, "{name}");
        let at_one = r.verifications.iso.iter().find(|v| v.z == Scalar::one()).map(|v| v.pass);
        assert_eq!(at_one, Some(entry.expected.iso_at_one), "{name}");
        assert_eq!(out.exit_code, 0);
    }
}

#[test]
fn machine_report_is_deterministic() {
    let cfg = example("m2", None).unwrap().config;
    let a = run(&cfg, None).unwrap().report.to_machine();
    let b = run(&cfg, None).unwrap().report.to_machine();
    assert_eq!(a, b);
    let doc: serde_json::Value = serde_json::from_str(&a).unwrap();
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["config_echo", "graded_basis", "family", "n0", "presentations", "specializations", "verifications", "diagnostics"] {
        assert!(keys.contains(&k), "missing {k}");
    }
    let out = bin(&["run", "--example", "m2", "--emit", "machine"]);
    let again = bin(&["run", "--example", "m2", "--emit", "machine"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn exit_codes() {
    let cc = configs_dir().join("cc.json");
    assert_eq!(bin(&["run", cc.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(bin(&["run", "--input", cc.to_str().unwrap(), "--specialize", "2"]).status.code(), Some(0));
    assert_eq!(bin(&["run", "--example", "m2", "--max-word-len", "1"]).status.code(), Some(3));
    assert_eq!(bin(&["run", "--example", "m2", "--t-cap", "1"]).status.code(), Some(3));
    assert_eq!(bin(&["run", "--example", "nope"]).status.code(), Some(4));
    assert_eq!(bin(&["run", "--example", "wemyss", "--param", "e=0"]).status.code(), Some(4));
    assert_eq!(bin(&["run", "/nonexistent/config.json"]).status.code(), Some(4));
    assert_eq!(bin(&["run", "--bogus"]).status.code(), Some(4));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));

    let rel = scratch("m2-short.rel");
    std::fs::write(&rel, "# too few relations\nx^2\ny^2\n").unwrap();
    let out = bin(&["run", "--example", "m2", "--verify-presentation", rel.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn options_reach_the_pipeline() {
    let path = scratch("m2.json");
    let out = bin(&["run", "--example", "m2", "--backend", "approx", "--tol", "1e-9", "--emit", "machine", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["diagnostics"]["backend"], "approx");
    assert_eq!(doc["diagnostics"]["eps"], 1e-9);
    assert_eq!(doc["graded_basis"]["n"], 4);
}

#[test]
fn example_subcommand_emits_a_runnable_config() {
    let out = bin(&["example", "wemyss", "--param", "e=2"]);
    assert_eq!(out.status.code(), Some(0));
    let cfg = RunConfig::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let res = run(&cfg, None).unwrap();
    assert_eq!(res.report.graded_basis.n, 9);
    assert!(res.report.verifications.all_pass);
}

#[test]
fn text_report_names_the_verdict() {
    let out = bin(&["run", "--example", "cc"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("dimension n = 2"));
    assert!(text.ends_with("result: PASS\n"));
}
