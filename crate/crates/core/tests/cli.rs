use std::path::Path;
use std::process::{Command, Output};

fn birkhoff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_birkhoff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bounds_range_and_json() {
    assert_eq!(birkhoff(&["bounds", "--n", "3"]).status.code(), Some(2));
    assert_eq!(birkhoff(&["bounds", "--n", "65"]).status.code(), Some(2));
    let o = birkhoff(&["--json", "bounds", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["g"], "192");
    assert_eq!(v["best_known"], "192");
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let fano = dir.path().join("fano.json");
    assert_eq!(
        birkhoff(&["construct", "fano", "-o", path(&fano)]).status.code(),
        Some(0)
    );
    let ok = |args: &[&str]| birkhoff(args).status.code();
    assert_eq!(ok(&["verify", "clique", "--file", path(&fano)]), Some(0));
    assert_eq!(ok(&["verify", "independent", "--file", path(&fano)]), Some(1));
    assert_eq!(
        ok(&["verify", "maximal-clique", "--file", path(&fano), "--ambient", "7"]),
        Some(0)
    );

    let g = dir.path().join("g.json");
    assert_eq!(ok(&["construct", "g-set", "--n", "8", "-o", path(&g)]), Some(0));
    assert_eq!(
        ok(&["verify", "independent", "--file", path(&g), "--exhaustive"]),
        Some(0)
    );
    assert_eq!(
        ok(&["verify", "maximal-independent", "--file", path(&g), "--ambient", "9"]),
        Some(0)
    );
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(doc["degree"], 8);
    assert_eq!(doc["elements"].as_array().unwrap().len(), 192);
}

#[test]
fn errors_map_to_exit_codes() {
    assert_eq!(
        birkhoff(&["verify", "clique", "--file", "/nonexistent/set.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(birkhoff(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"degree": 3, "elements": ["(1,2,4)"]}"#).unwrap();
    assert_eq!(
        birkhoff(&["verify", "clique", "--file", path(&bad)]).status.code(),
        Some(2)
    );
    let o = birkhoff(&["--mem-budget", "1000", "export", "--family", "sym", "--n", "8"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn export_dimacs() {
    let o = birkhoff(&["export", "--family", "sym", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "p edge 6 15"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 15);
}

#[test]
fn solve_small() {
    let o = birkhoff(&["--json", "solve", "omega", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["best_size"], 6);
    let o = birkhoff(&["solve", "omega-k-cycle", "--n", "6", "--k", "3", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn acceptance_single_criterion() {
    assert_eq!(birkhoff(&["acceptance", "--criterion", "10"]).status.code(), Some(0));
    let o = birkhoff(&["acceptance", "--criterion", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("[FAIL]  2"));
}
