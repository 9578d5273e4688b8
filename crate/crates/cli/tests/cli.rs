use std::process::{Command, Output};

fn orbiforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbiforge")).args(args).env_remove("ORBIFORGE_MAX_COSETS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    format!("{}/../core/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn abelianize_files() {
    let o = orbiforge(&["abelianize", &fixture("gamma.pres")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Z/2 x Z/2");
    let o = orbiforge(&["abelianize", "builtin:figure8"]);
    assert_eq!(stdout(&o).trim(), "Z");
    let o = orbiforge(&["abelianize", "builtin:models/p6"]);
    assert_eq!(stdout(&o).trim(), "Z/6");
}

#[test]
fn cosets_and_limits() {
    let o = orbiforge(&["cosets", &fixture("p6.pres"), "--subgroup", "b a^-2; b^-1 a^2"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "index 6"));
    let o = orbiforge(&["cosets", &fixture("p4.pres"), "--subgroup", "c^2 d^-1;c d^-1 c", "--table"]);
    assert!(stdout(&o).starts_with("index 4\ncoset c c^-1 d d^-1\n"));
    let o = orbiforge(&["cosets", &fixture("figure8.pres"), "--max-cosets", "100"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_orbiforge"))
        .args(["cosets", &fixture("figure8.pres")])
        .env("ORBIFORGE_MAX_COSETS", "64")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("64"));
}

#[test]
fn input_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("orbiforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.pres");
    std::fs::write(&bad, "group g\ngens a b\nrel a c\n").unwrap();
    let o = orbiforge(&["abelianize", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("3:7"), "{}", stderr(&o));
    assert_eq!(orbiforge(&["abelianize", "/nonexistent/x.pres"]).status.code(), Some(2));
    assert_eq!(orbiforge(&["classify", "p7"]).status.code(), Some(2));
    assert_eq!(orbiforge(&["classify", "p6", "--sign", "a=-1,b=-1"]).status.code(), Some(2));
    assert_eq!(orbiforge(&["rhombic", "1,0", "2,0"]).status.code(), Some(2));
    assert_eq!(orbiforge(&["verify-paper", "--only", "no-such-check"]).status.code(), Some(2));
    assert_eq!(orbiforge(&["frobnicate"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn classify_and_covers() {
    let o = orbiforge(&["classify", "p6", "--sign", "a=-1"]);
    assert_eq!(stdout(&o), "S2(3,3,3) (333, p3)\nindex 2\n");
    let o = orbiforge(&["classify", "*442"]);
    assert!(stdout(&o).starts_with("D2(;2,4,4)"));
    let o = orbiforge(&["double-cover", "pgg"]);
    assert!(stdout(&o).starts_with("S2(2,2,2,2)"));
}

#[test]
fn rhombic_verdicts() {
    assert!(stdout(&orbiforge(&["rhombic", "1,0", "0,1"])).starts_with("rhombic"));
    assert!(stdout(&orbiforge(&["rhombic", "(1,0)", "(1/2,1/2*rt3)"])).starts_with("rhombic"));
    assert!(stdout(&orbiforge(&["rhombic", "2,0", "0,1"])).starts_with("not rhombic"));
}

#[test]
fn verdicts() {
    let o = orbiforge(&["verdict", "S2(2,4,4)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "excluded");
    assert_eq!(v["reason"], "four_torsion");
    let o = orbiforge(&["verdict", "D2(3;3)"]);
    assert!(stdout(&o).contains("realizable"));
    assert_eq!(orbiforge(&["verdict", "S2(2,3,7)"]).status.code(), Some(2));
}

#[test]
fn verify_paper_json_is_deterministic() {
    let a = orbiforge(&["verify-paper", "--format", "json", "--seed", "0"]);
    let b = orbiforge(&["verify-paper", "--format", "json", "--seed", "0"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 14);
    for c in checks {
        assert!(c["status"] == "pass" || c["status"] == "cited", "{c}");
        for key in ["id", "paper_anchor", "status", "detail"] {
            assert!(c.get(key).is_some());
        }
    }
}

#[test]
fn verify_paper_single_check() {
    let o = orbiforge(&["verify-paper", "--only", "collapse-236", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert_eq!(v["checks"][0]["id"], "collapse-236");
    let o = orbiforge(&["verify-paper", "--only", "rep-p6,rep-p4"]);
    assert_eq!(stdout(&o).lines().count(), 3);
}
