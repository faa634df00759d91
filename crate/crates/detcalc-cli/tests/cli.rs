use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detcalc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--id", "macmahon", "--trials", "3", "--seed", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("macmahon: pass (3/3)"));
    assert_eq!(run(&["verify", "--id", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--id", "macmahon", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn conjecture_is_labelled() {
    let out = run(&["verify", "--id", "okada", "--trials", "2", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("conjecture-consistent"));
}

#[test]
fn eval_identity_and_matrix() {
    let out = run(&["eval", "--id", "macmahon", "-p", "a=2", "-p", "b=2", "-p", "n=2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("det = 20") && text.contains("equal"), "{text}");
    let m = run(&["eval", "--matrix", "1,2;3,4", "--format", "json"]);
    assert_eq!(m.status.code(), Some(0));
    assert_eq!(json(&m)["det"], "-2");
    for s in ["laplace", "gauss", "condensation"] {
        let m = run(&["eval", "--matrix", "2,1/2,0;1,3,-1;0,1,4", "--strategy", s, "--format", "json"]);
        assert_eq!(json(&m)["det"], "24", "{s}");
    }
    assert_eq!(run(&["eval", "--matrix", "1,2;3"]).status.code(), Some(2));
}

#[test]
fn guess_examples() {
    let n = run(&["guess", "1,2,3,4,5,6"]);
    assert_eq!(n.status.code(), Some(0));
    assert!(stdout(&n).contains('n'));
    let central = run(&["guess", "1,2,6,20,70,252,924,3432", "--format", "json"]);
    let v = json(&central);
    assert_eq!(v["accepted"], true);
    assert_eq!(v["guesses"][0]["level"], 1);
    assert_eq!(run(&["guess", "1,1,2,3,5,8,13,21,34,55"]).status.code(), Some(1));
    assert_eq!(run(&["guess", "1,x"]).status.code(), Some(2));
}

#[test]
fn hankel_examples() {
    let out = run(&["hankel", "--seq", "bernoulli", "--offset", "2", "--n", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dets"], serde_json::json!(["1/6", "-1/180", "-1/10500"]));
    assert_eq!(v["b"][0], "-1/5");
    assert_eq!(v["agree"], true);
    let cat = run(&["hankel", "--seq", "catalan", "--n", "5", "--format", "json"]);
    assert_eq!(json(&cat)["dets"], serde_json::json!(["1", "1", "1", "1", "1"]));
    assert_eq!(run(&["hankel", "--seq", "custom:1,0,0", "--n", "2"]).status.code(), Some(3));
    assert_eq!(run(&["hankel", "--seq", "nosuch", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("detcalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let args = ["verify", "--id", "cauchy", "--trials", "2", "--seed", "9", "--format", "json"];
    let a = run(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(run(&with_out).status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn list_covers_everything() {
    let v = json(&run(&["list", "--format", "json"]));
    let ids: Vec<&str> = v["identities"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, detcalc::catalog::all_ids());
}
