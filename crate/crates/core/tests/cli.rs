use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slackcert")).args(args).output().unwrap()
}

fn scratch(name: &str, body: &str) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("slackcert-bin-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn chain_builds_a_simplex() {
    let f = scratch("chain3.json", r#"{"elements":["1","2","3"],"relations":[["1","2"],["2","3"],["1","3"]]}"#);
    let o = bin(&["orderpoly", "build", &f]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["facets"].as_array().unwrap().len(), 4);
    assert_eq!(v["dim"], 3);
}

#[test]
fn fence_certificate_verifies_through_files() {
    let f = scratch("fenceR.json", r#"{"elements":["1","2","3","4"],"relations":[["1","3"],["2","3"],["2","4"]]}"#);
    let o = bin(&["cert", "make", &f]);
    assert_eq!(o.status.code(), Some(0));
    let c = scratch("fenceR.cert.json", std::str::from_utf8(&o.stdout).unwrap());
    let v = bin(&["cert", "verify", &c, &f]);
    assert_eq!(v.status.code(), Some(0), "{}", String::from_utf8_lossy(&v.stdout));
    assert_eq!(json(&v)["passed"], true);
    // the same certificate does not match the cube
    let w = bin(&["cert", "verify", &c, "builtin:hypercube(3)"]);
    assert_eq!(w.status.code(), Some(1));
}

#[test]
fn antichain_is_refused_with_witness() {
    let f = scratch("antichain3.json", r#"{"elements":["a","b","c"]}"#);
    let o = bin(&["cert", "make", &f]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let w: Vec<&str> = v["witness"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(w, ["a", "b", "c"]);
}

#[test]
fn usage_errors_are_json_on_stderr() {
    let o = bin(&["orderpoly", "build", "/nonexistent/poset.json"]);
    assert_eq!(o.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(e["error"], "Usage");
    let o = bin(&["cert", "make"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_reproducible() {
    let a = bin(&["--seed", "3", "sweep", "posets", "--max-elements", "4"]);
    let b = bin(&["--seed", "3", "sweep", "posets", "--max-elements", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(json(&a)["posets_by_size"], serde_json::json!([1, 1, 2, 5, 16]));
}
