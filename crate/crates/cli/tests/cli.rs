use std::process::Command;

use fareyforge_core::io::write_document;
use fareyforge_core::minors::ModelJson;
use fareyforge_core::{VertexId, VertexSet};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("fareyforge").chain(args.iter().copied());
    let code = fareyforge_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn generate_halved_farey() {
    let (code, out, _) = run(&["generate", "halved-farey", "--order", "2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn dot_output() {
    let (code, out, _) = run(&["render", "cycle", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph G {"));
    assert_eq!(out.matches(" -- ").count(), 4);
    let (code, _, _) = run(&["lambda", "--graph", "gen:complete:3", "--format", "dot"]);
    assert_eq!(code, 3);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, 3);
    assert_eq!(run(&["nope"]).0, 3);
    assert_eq!(run(&["generate", "complete"]).0, 3);
    assert_eq!(run(&["lambda", "--graph", "gen:complete:4", "--u", "1"]).0, 3);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn input_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"format\": 1}").unwrap();
    let (code, _, err) = run(&["lambda", "--graph", bad.to_str().unwrap()]);
    assert_eq!(code, 4);
    assert!(err.contains("bad.json"));
    let (code, _, _) = run(&["lambda", "--graph", "gen:wheel:5"]);
    assert_eq!(code, 4);
    let (code, _, _) = run(&["lambda", "--graph", "gen:complete:4", "--u", "1", "--v", "9"]);
    assert_eq!(code, 4);
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["lambda", "--graph", missing.to_str().unwrap()]).0, 5);
}

#[test]
fn lambda_values() {
    let (_, out, _) = run(&["lambda", "--graph", "gen:complete:6"]);
    assert_eq!(json(&out)["lambda"], 5);
    let (_, out, _) = run(&["lambda", "--graph", "gen:cycle:6", "--u", "v1", "--v", "v4"]);
    assert_eq!(json(&out)["lambda"], 2);
}

#[test]
fn find_and_verify_models() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["find-minor", "--host", "gen:complete:5", "--pattern", "gen:cycle:4", "--pin", "v1=1"]);
    assert_eq!(code, 0);
    let doc: ModelJson = serde_json::from_str(&out).unwrap();
    assert!(doc.branch_sets[&VertexId::new("v1")].contains(&VertexId::new("1")));
    let model = dir.path().join("m.json");
    std::fs::write(&model, &out).unwrap();
    assert_eq!(run(&["verify-model", "--host", "gen:complete:5", "--model", model.to_str().unwrap()]).0, 0);

    let mut broken = doc.clone();
    let first: VertexSet = broken.branch_sets[&VertexId::new("v1")].clone();
    broken.branch_sets.insert(VertexId::new("v2"), first);
    std::fs::write(&model, write_document(&broken)).unwrap();
    let (code, out, _) = run(&["verify-model", "--host", "gen:complete:5", "--model", model.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["valid"], false);

    let (code, _, _) = run(&["find-minor", "--host", "gen:halved-farey:2", "--pattern", "gen:complete-bipartite:2:3"]);
    assert_eq!(code, 1);
    let (code, out, _) =
        run(&["--budget-nodes", "3", "find-minor", "--host", "gen:complete:8", "--pattern", "gen:complete:6"]);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["outcome"], "budget-exhausted");
}

#[test]
fn starcomb_exit_codes() {
    let (code, out, _) = run(&["starcomb", "--graph", "gen:tree:3:1", "--u", "r.0,r.1,r.2", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["outcome"], "star");
    assert_eq!(json(&out)["center"], "r");
    let (code, out, _) = run(&["starcomb", "--graph", "gen:path:3", "--u", "v1,v3", "--k", "3"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["outcome"], "absent");
}

#[test]
fn classes_and_bonds() {
    let (code, out, _) = run(&["classes", "--graph", "gen:cycle:5", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["classes"].as_array().unwrap().len(), 5);
    let (code, out, _) = run(&["bonds", "--graph", "gen:cycle:4", "--max-size", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out).as_array().unwrap().len(), 6);
}

#[test]
fn prune_reports_branch_order() {
    let (code, out, _) = run(&["prune", "--graph", "gen:tree:2:3", "--root", "r", "--height", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["branch_order"], 3);
    assert_eq!(json(&out)["rounds"], 4);
    let (code, _, _) = run(&["prune", "--graph", "gen:tree:2:3", "--root", "r", "--height", "4"]);
    assert_eq!(code, 1);
}

#[test]
fn engine_writes_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let (code, out, _) =
        run(&["engine", "--host", "gen:complete:12", "--k", "8", "--order", "2", "--trace", trace.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["order"], 2);
    let t = json(&std::fs::read_to_string(&trace).unwrap());
    assert_eq!(t["format"], "fareyforge-trace-v1");

    let (code, out, _) = run(&["engine", "--host", "gen:tree-join:3:3", "--k", "2", "--order", "3"]);
    assert_eq!(code, 2);
    assert!(json(&out)["obstruction"].is_string());
    assert_eq!(run(&["engine", "--host", "gen:complete:5", "--k", "2", "--order", "1", "--budget", "soon"]).0, 3);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let (code, out, _) = run(&["--out", path.to_str().unwrap(), "generate", "complete", "--n", "3"]);
    assert_eq!((code, out.as_str()), (0, ""));
    let (code, out, _) = run(&["lambda", "--graph", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["lambda"], 2);
}

#[test]
fn random_generation_is_seeded() {
    let a = run(&["--seed", "7", "generate", "random", "--n", "9", "--p", "0.4", "--mult", "3"]).1;
    let b = run(&["--seed", "7", "generate", "random", "--n", "9", "--p", "0.4", "--mult", "3"]).1;
    let c = run(&["--seed", "8", "generate", "random", "--n", "9", "--p", "0.4", "--mult", "3"]).1;
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn binary_exit_code() {
    let bin = env!("CARGO_BIN_EXE_fareyforge");
    let ok = Command::new(bin).args(["generate", "path", "--n", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let body = String::from_utf8(ok.stdout).unwrap();
    assert!(body.contains("\"v3\""));
    let bad = Command::new(bin).args(["find-minor"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
