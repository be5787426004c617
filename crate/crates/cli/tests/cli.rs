use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nerve-forge"))
        .current_dir(dir)
        .env_remove("NERVE_FORGE_SEED")
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

const P4: &str = r#"{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}"#;
const K3: &str = r#"{"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}"#;

#[test]
fn construct_then_verify_and_render() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    write(d, "p4.json", P4);
    write(d, "k3.json", K3);
    let src = ["--random", "10", "--mode", "convex-position", "--seed", "3"];
    let mut args = vec!["construct", "tree", "--graph", "p4.json", "--out", "part.json", "--svg", "p.svg"];
    args.extend(src);
    let out = run(d, &args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["outcome"], "ok");
    assert_eq!(report["verified"], true);
    assert_eq!(report["partition"].as_array().unwrap().len(), 10);
    assert!(std::fs::read_to_string(d.join("p.svg")).unwrap().starts_with("<svg"));

    let mut args = vec!["verify", "--partition", "part.json", "--graph", "p4.json"];
    args.extend(src);
    assert_eq!(run(d, &args).status.code(), Some(0));
    args[4] = "k3.json";
    let out = run(d, &args);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verified"], false);

    let mut args = vec!["render", "--partition", "part.json", "--out", "again.svg"];
    args.extend(src);
    assert!(run(d, &args).status.success());
    assert_eq!(
        std::fs::read(d.join("p.svg")).unwrap(),
        std::fs::read(d.join("again.svg")).unwrap()
    );
}

#[test]
fn blocker_search_is_an_honest_negative() {
    let tmp = tempfile::tempdir().unwrap();
    write(tmp.path(), "p4.json", P4);
    let out = run(tmp.path(), &["search", "--builtin", "p4-blocker-8", "--graph", "p4.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["outcome"], "not-found");
}

#[test]
fn cycle_and_star_from_files() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    let gen = run(d, &["generate", "--n", "20", "--seed", "5"]);
    assert!(gen.status.success());
    std::fs::write(d.join("pts.json"), &gen.stdout).unwrap();
    let out = run(d, &["construct", "cycle", "--points", "pts.json", "--n", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["verified"], true);
    let out = run(d, &["construct", "star", "--points", "pts.json", "--n", "10"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["verified"], true);
}

#[test]
fn nerve_lists_faces() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    write(d, "pts.json", r#"{"dim": 2, "points": [[0, 0], [2, 2], [0, 2], [2, 0]]}"#);
    write(d, "part.json", r#"{"n_parts": 2, "assignment": [0, 0, 1, 1]}"#);
    let out = run(d, &["nerve", "--points", "pts.json", "--partition", "part.json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["graph"]["edges"], serde_json::json!([[0, 1]]));
}

#[test]
fn subset_reports_missing_subsets() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    write(d, "pts.json", r#"{"dim": 2, "points": [[0, 0], [4, 0], [0, 4], [1, 1]]}"#);
    let out = run(d, &["subset", "convex", "--points", "pts.json", "--size", "3"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["indices"].as_array().unwrap().len(), 3);
    let out = run(d, &["subset", "convex", "--points", "pts.json", "--size", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_input_is_an_error() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path();
    write(d, "bad.json", r#"{"dim": 2, "points": [[0, "zero"]]}"#);
    write(d, "p4.json", P4);
    let out = run(d, &["construct", "tree", "--points", "bad.json", "--graph", "p4.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    let out = run(d, &["construct", "tree", "--builtin", "nope", "--graph", "p4.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn acceptance_subset_runs() {
    let out = run(Path::new("."), &["acceptance", "--only", "8,12"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn seed_comes_from_the_environment() {
    let a = Command::new(env!("CARGO_BIN_EXE_nerve-forge"))
        .env("NERVE_FORGE_SEED", "9")
        .args(["generate", "--n", "3"])
        .output()
        .unwrap();
    let tmp = tempfile::tempdir().unwrap();
    let b = run(tmp.path(), &["generate", "--n", "3", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}
