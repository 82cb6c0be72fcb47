use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legfront"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(sub: &str, file: &str, extra: &[&str]) -> Output {
    let path = corpus(file);
    let mut args = vec![sub, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(o)).expect("valid JSON");
    assert_eq!(v["schema_version"], 1);
    v
}

#[test]
fn invariants_of_the_trefoil() {
    let v = json(&run_on("invariants", "trefoil.front", &["--json"]));
    assert_eq!(v["command"], "invariants");
    let c = &v["result"]["invariants"]["components"][0];
    assert_eq!((c["tb"].as_i64(), c["rot"].as_i64()), (Some(1), Some(0)));
    let o = run_on("invariants", "trefoil.front", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("tb"));
}

#[test]
fn slice_check_of_an_iterated_double() {
    let o = run_on("slice-check", "wh3_trefoil.front", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NotSlice"));
    let v = json(&run_on("slice-check", "wh3_trefoil.front", &["--json"]));
    let c = &v["result"]["certificate"];
    assert_eq!(c["verdict"], "NotSlice");
    assert_eq!((c["tb"].as_i64(), c["lhs"].as_i64()), (Some(1), Some(-1)));
    assert_eq!(c["inequality_holds"], false);
}

#[test]
fn pushoff_reports_the_framing() {
    let v = json(&run_on(
        "pushoff",
        "trefoil.front",
        &["--framing", "-2", "--json"],
    ));
    let r = &v["result"];
    assert_eq!(r["framing"], -2);
    let (k, c) = (
        r["knot_index"].as_u64().unwrap() as usize,
        r["companion_index"].as_u64().unwrap() as usize,
    );
    assert_eq!(r["invariants"]["linking"][k][c], -2);
    assert_eq!(r["invariants"]["components"][c]["tb"], -5);
}

#[test]
fn double_reaches_tb_one() {
    let v = json(&run_on("double", "trefoil.front", &["-n", "2", "--json"]));
    assert_eq!(v["result"]["invariants"]["components"][0]["tb"], 1);
}

#[test]
fn stein_check_statuses_and_exit_codes() {
    let v = json(&run_on(
        "stein-check",
        "trefoil.front",
        &["--framings", "-1", "--json"],
    ));
    let s = &v["result"]["report"]["handles"][0]["status"];
    assert_eq!(s["SteinAfterStabilizations"]["k"], 1);
    // an uncertified handle is a result, not an error
    let o = run_on("stein-check", "unknot.front", &["--framings", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NotCertified"));
    // wrong number of framings is a usage error
    let o = run_on("stein-check", "hopf.front", &["--framings", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn genus_bound_and_legendrianize() {
    let v = json(&run_on(
        "genus-bound",
        "trefoil.front",
        &["--framing", "0", "--json"],
    ));
    assert_eq!(v["result"]["bounds"][0]["bound"], 1);
    let v = json(&run_on("legendrianize", "grids/trefoil.grid", &["--json"]));
    assert_eq!(v["result"]["grid_size"], 5);
    assert_eq!(v["result"]["invariants"]["components"][0]["tb"], 1);
}

#[test]
fn fuzz_and_verify_pass() {
    let v = json(&run_on(
        "fuzz",
        "figure_eight.front",
        &["--steps", "300", "--seed", "9", "--allow-stab", "--json"],
    ));
    assert_eq!(v["result"]["invariance_holds"], true);
    let v = json(&run_on("verify", "torus_2_4.front", &["--json"]));
    assert_eq!(v["result"]["agrees"], true);
}

#[test]
fn json_output_is_byte_stable() {
    for (sub, extra) in [
        ("invariants", vec!["--json"]),
        ("fuzz", vec!["--steps", "200", "--seed", "3", "--json"]),
        ("verify", vec!["--json"]),
    ] {
        let a = run_on(sub, "figure_eight.front", &extra);
        let b = run_on(sub, "figure_eight.front", &extra);
        assert_eq!(a.stdout, b.stdout, "{sub}");
    }
}

#[test]
fn svg_render_is_deterministic_and_file_output_works() {
    let a = run_on("render", "hopf.front", &["--format", "svg", "--labels"]);
    let b = run_on("render", "hopf.front", &["--format", "svg", "--labels"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let dir = std::env::temp_dir().join(format!("legfront-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("hopf.svg");
    let o = run_on(
        "render",
        "hopf.front",
        &["--format", "svg", "--labels", "-o", out.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), a.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_file_exits_one() {
    let o = run(&["invariants", "/nonexistent/nowhere.front"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    assert!(o.stdout.is_empty());
}

#[test]
fn domain_errors_exit_one() {
    // slice-check wants a knot
    let o = run_on("slice-check", "hopf.front", &[]);
    assert_eq!(o.status.code(), Some(1));
    let dir = std::env::temp_dir().join(format!("legfront-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.front");
    std::fs::write(&bad, "L1 R2\n").unwrap();
    let o = run(&["invariants", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    let o = run_on("pushoff", "trefoil.front", &[]);
    assert_eq!(o.status.code(), Some(2));
    let o = run_on("render", "trefoil.front", &["--column-width", "1"]);
    assert_eq!(o.status.code(), Some(2));
}
