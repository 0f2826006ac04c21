use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_raag-depth"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-graphs");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn depths(v: &Value) -> Vec<u64> {
    v["results"]["values"].as_array().unwrap().iter().map(|x| x["depth"].as_u64().unwrap()).collect()
}

#[test]
fn complete_graph_takes_abelian_branch() {
    let k3 = scratch("k3.txt", "3\n0 1\n1 2\n0 2\n");
    let (code, v) = run_json(&["depth", "--edges", k3.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["depth"], 3);
    assert_eq!(v["results"]["abelian"], true);
    assert_eq!(v["results"]["values"][0]["provenance"], "abelian branch");
}

#[test]
fn four_cycle_all_methods() {
    let c4 = scratch("c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    let (code, v) = run_json(&["depth", "--edges", c4.to_str().unwrap(), "--method", "all"]);
    assert_eq!(code, 0);
    assert_eq!(depths(&v), vec![2, 2, 2]);
    assert_eq!(v["results"]["agreement"], true);
    let human = String::from_utf8(run(&["depth", "--edges", c4.to_str().unwrap()]).stdout).unwrap();
    assert!(human.contains("methods: 2/2/2, agreement true"), "{human}");
}

#[test]
fn single_method() {
    let c4 = scratch("c4-single.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    let (_, v) = run_json(&["depth", "--edges", c4.to_str().unwrap(), "--method", "n-p"]);
    assert_eq!(depths(&v), vec![2]);
    assert_eq!(v["results"]["values"][0]["provenance"], "n_P");
}

#[test]
fn two_points_have_depth_one() {
    let two = scratch("two.txt", "2\n");
    let (code, v) = run_json(&["depth", "--edges", two.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["depth"], 1);
}

#[test]
fn json_input() {
    let path = scratch("path.json", r#"{"labels": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]}"#);
    let (code, v) = run_json(&["depth", "--json", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["depth"], 2);
    assert_eq!(v["results"]["witness"], serde_json::json!(["b"]));
}

#[test]
fn input_errors_exit_one() {
    let bad = scratch("bad.txt", "3\n0 7\n");
    let out = run(&["depth", "--edges", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(run(&["depth"]).status.code(), Some(1));
    assert_eq!(run(&["depth", "--edges", "/nonexistent/graph.txt"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn ext_examples() {
    let k2 = scratch("k2.txt", "2\n0 1\n");
    let (code, v) = run_json(&["ext", "--edges", k2.to_str().unwrap(), "--weights", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["least_nonzero_p"], 2);
    assert_eq!(v["results"]["provenance"], "truncated Ext");
    let verdict = v["results"]["verdict"].as_str().unwrap();
    assert!(verdict.contains("dim 1 at weight 2") && verdict.contains("window 6"), "{verdict}");

    let f2 = scratch("f2.txt", "2\n");
    let (_, v) = run_json(&["ext", "--edges", f2.to_str().unwrap(), "--resolution", "minimal"]);
    assert_eq!(v["results"]["least_nonzero_p"], 1);
    assert_eq!(v["results"]["resolution"]["ranks"], serde_json::json!([1, 2, 0]));
}

#[test]
fn hilbert_and_lie_dims() {
    let c4 = scratch("c4-hilbert.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    let (code, v) = run_json(&["hilbert", "--edges", c4.to_str().unwrap(), "--weights", "5"]);
    assert_eq!(code, 0);
    for method in v["results"]["ul_dims"].as_array().unwrap() {
        assert_eq!(method["dims"]["dims"], serde_json::json!([1, 4, 12, 32, 80, 192]));
    }
    let f2 = scratch("f2-lie.txt", "2\n");
    let (code, v) = run_json(&["lie-dims", "--edges", f2.to_str().unwrap(), "--weights", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["lie_dims"][0]["dims"]["dims"], serde_json::json!([2, 1, 2, 3, 6, 9]));
}

#[test]
fn surface_examples() {
    let (code, v) = run_json(&["surface", "--genus", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["lie_dims"]["dims"]["dims"], serde_json::json!([2, 0, 0, 0, 0, 0]));
    assert_eq!(v["results"]["ext"]["least_nonzero_p"], 2);

    let (code, v) = run_json(&["surface", "--genus", "2", "--weights", "6"]);
    assert_eq!(code, 0);
    let l = &v["results"]["lie_dims"]["dims"]["dims"];
    assert_eq!((l[0].as_u64(), l[1].as_u64()), (Some(4), Some(5)));
    assert_eq!(v["results"]["ext"]["least_nonzero_p"], 2);

    let (code, v) = run_json(&["surface", "--genus", "3", "--pmax", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["lie_dims"]["dims"]["dims"][1], 14);

    assert_eq!(run(&["surface", "--genus", "0"]).status.code(), Some(1));
}

#[test]
fn verify_small_sweep() {
    let (code, v) = run_json(&["verify", "--max-vertices", "4"]);
    assert_eq!(code, 0);
    let swept = v["results"]["graphs_swept"].as_array().unwrap();
    assert_eq!(swept.last().unwrap()["graphs"], 64);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn injected_fault_reports_witness() {
    let (code, v) = run_json(&["verify", "--max-vertices", "3", "--inject-fault", "cohomology"]);
    assert_eq!(code, 2);
    let outcomes = v["results"]["outcomes"].as_array().unwrap();
    let failed = outcomes.iter().find(|o| o["id"] == "method-equivalence").unwrap();
    assert_eq!(failed["passed"], false);
    assert!(failed["witness"]["graph"]["labels"].is_array());

    let (code, v) = run_json(&["verify", "--max-vertices", "3", "--inject-fault", "froberg"]);
    assert_eq!(code, 2);
    let failed = v["results"]["outcomes"].as_array().unwrap().iter().find(|o| o["id"] == "froberg-exactness").unwrap();
    assert!(failed["witness"]["detail"].as_str().unwrap().contains("d∘d ≠ 0"));
}

#[test]
fn batch_over_directory() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-batch");
    fs::create_dir_all(&dir).unwrap();
    fs::write(dir.join("a.txt"), "4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    fs::write(dir.join("b.txt"), "3\n0 1\n1 2\n0 2\n").unwrap();
    let (code, v) = run_json(&["batch", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    let depths: Vec<u64> = v["results"].as_array().unwrap().iter().map(|r| r["result"]["depth"].as_u64().unwrap()).collect();
    assert_eq!(depths, vec![2, 3]);

    let bad = scratch("batch-bad.txt", "oops\n");
    let (code, v) = run_json(&["batch", dir.join("a.txt").to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(v["results"][1]["error"].is_string());
}

#[test]
fn structured_output_is_deterministic() {
    let c4 = scratch("c4-det.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    let args = ["ext", "--edges", c4.to_str().unwrap(), "--format", "json"];
    let (a, b) = (run(&args).stdout, run(&args).stdout);
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    for key in ["input", "results", "checks", "timings"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["timings"], serde_json::json!({}));
}
