use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const E1: &str = r#"{
  "name": "e1",
  "attributes": ["a1", "a2", "a3"],
  "candidates": [
    {"id": "c1", "attributes": ["a1"], "profit": 3},
    {"id": "c2", "attributes": ["a2"], "profit": 2},
    {"id": "c3", "attributes": ["a3"], "profit": 5},
    {"id": "c4", "attributes": [], "profit": 4}
  ],
  "constraints": ["a1 -> a2", "a3 -> ~a2"],
  "k": 2,
  "p": 8
}"#;

fn cecac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cecac")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Dir {
        Dir(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.path(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> String {
        self.0.path().join(name).to_str().unwrap().to_string()
    }
}

#[test]
fn solve_auto_routes_to_chain_dp() {
    let d = Dir::new();
    let e1 = d.file("e1.json", E1);
    let o = cecac(&["solve", &e1, "--solver", "auto", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["committee"], serde_json::json!(["c3", "c4"]));
    assert_eq!(v["profit"], 9);
    assert_eq!(v["solver"], "chaindp");
    assert_eq!(v["feasible"], true);
}

#[test]
fn explicit_solvers() {
    let d = Dir::new();
    let e1 = d.file("e1.json", E1);
    assert_eq!(code(&cecac(&["solve", &e1, "--solver", "treedp"])), 3);
    for s in ["oracle", "chaindp", "fpt"] {
        assert_eq!(code(&cecac(&["solve", &e1, "--solver", s])), 0, "{s}");
    }
    assert_eq!(code(&cecac(&["solve", &e1, "--solver", "magic"])), 2);
}

#[test]
fn infeasible_bound() {
    let d = Dir::new();
    let p10 = d.file("e1_p10.json", &E1.replace("\"p\": 8", "\"p\": 10"));
    let o = cecac(&["solve", &p10, "--json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["feasible"], false);
}

#[test]
fn oracle_budget_from_env() {
    let d = Dir::new();
    let e1 = d.file("e1.json", E1);
    let o = Command::new(env!("CARGO_BIN_EXE_cecac"))
        .args(["solve", &e1, "--solver", "oracle"])
        .env("CECAC_ENUM_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn malformed_input_exits_2() {
    let d = Dir::new();
    let cases = [
        ("float.json", E1.replace("\"profit\": 3", "\"profit\": 3.5")),
        ("extra.json", E1.replace("\"k\": 2", "\"k\": 2, \"x\": 0")),
        ("syntax.json", E1.replace("a1 -> a2", "a1 -> -> a2")),
        ("undeclared.json", E1.replace("a1 -> a2", "a9 -> a2")),
        ("ktoobig.json", E1.replace("\"k\": 2", "\"k\": 9")),
        ("garbage.json", "not json".into()),
    ];
    for (name, text) in cases {
        let path = d.file(name, &text);
        let o = cecac(&["solve", &path]);
        assert_eq!(code(&o), 2, "{name}");
        assert!(!o.stderr.is_empty(), "{name}");
    }
    assert_eq!(code(&cecac(&["solve", &d.path("missing.json")])), 2);
    let extra = d.file("extra2.json", &E1.replace("\"k\": 2", "\"k\": 2, \"x\": 0"));
    assert_eq!(code(&cecac(&["solve", &extra, "--lenient"])), 0);
}

#[test]
fn verify_committees() {
    let d = Dir::new();
    let e1 = d.file("e1.json", E1);
    let good = d.file("good.json", r#"{"committee": ["c3", "c4"]}"#);
    assert_eq!(code(&cecac(&["verify", &e1, &good])), 0);

    let bad = d.file("bad.json", r#"{"committee": ["c1", "c3"]}"#);
    let o = cecac(&["verify", &e1, &bad]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("a1 -> a2"));

    let short = d.file("short.json", r#"{"committee": ["c3"]}"#);
    let o = cecac(&["verify", &e1, &short]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("size mismatch"));

    let unknown = d.file("unknown.json", r#"{"committee": ["c3", "zz"]}"#);
    assert_eq!(code(&cecac(&["verify", &e1, &unknown])), 1);
    let broken = d.file("broken.json", "{");
    assert_eq!(code(&cecac(&["verify", &e1, &broken])), 2);
}

#[test]
fn solve_output_verifies() {
    let d = Dir::new();
    let e1 = d.file("e1.json", E1);
    let sol = d.file("sol.json", &stdout(&cecac(&["solve", &e1, "--json"])));
    assert_eq!(code(&cecac(&["verify", &e1, &sol])), 0);
}

fn generated(d: &Dir, args: &[&str], name: &str) -> serde_json::Value {
    let out = d.path(name);
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &out]);
    let o = cecac(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap()
}

#[test]
fn generate_reductions() {
    let d = Dir::new();
    let p3 = d.file("p3.txt", "3 2\n0 1\n1 2\n");
    let k3 = d.file("k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    let v = generated(&d, &["--mode", "indset", "--graph", &p3, "--kprime", "2"], "is.json");
    assert_eq!(v["candidates"].as_array().unwrap().len(), 3);
    assert_eq!(v["constraints"].as_array().unwrap().len(), 1);

    let v = generated(&d, &["--mode", "clique1", "--graph", &k3, "--kprime", "3"], "c1.json");
    assert_eq!(v["candidates"].as_array().unwrap().len(), 12);
    assert_eq!((v["k"].as_u64(), v["p"].as_i64()), (Some(12), Some(0)));

    let v = generated(&d, &["--mode", "clique2", "--graph", &k3, "--kprime", "3"], "c2.json");
    assert_eq!(v["candidates"].as_array().unwrap().len(), 18);
    assert_eq!((v["k"].as_u64(), v["p"].as_i64()), (Some(18), Some(9)));

    assert_eq!(code(&cecac(&["solve", &d.path("c1.json")])), 0);
    assert_eq!(code(&cecac(&["solve", &d.path("is.json")])), 0);
}

#[test]
fn generate_is_deterministic() {
    let d = Dir::new();
    let a = d.path("a.json");
    let b = d.path("b.json");
    assert_eq!(code(&cecac(&["generate", "--mode", "random", "--seed", "42", "--out", &a])), 0);
    assert_eq!(code(&cecac(&["generate", "--mode", "random", "--seed", "42", "--out", &b])), 0);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let o = cecac(&["generate", "--mode", "random", "--seed", "42"]);
    assert_eq!(stdout(&o).as_bytes(), fs::read(&a).unwrap());
}

#[test]
fn generate_rejects_inconsistent_flags() {
    let d = Dir::new();
    let p3 = d.file("p3.txt", "3 2\n0 1\n1 2\n");
    assert_eq!(code(&cecac(&["generate", "--mode", "clique1", "--kprime", "3"])), 2);
    assert_eq!(code(&cecac(&["generate", "--mode", "clique1", "--graph", &p3, "--kprime", "2"])), 2);
    assert_eq!(code(&cecac(&["generate", "--mode", "random", "--graph", &p3])), 2);
    assert_eq!(code(&cecac(&["generate", "--mode", "random", "--m", "2", "--k", "3"])), 2);
    let bad = d.file("bad.txt", "3 1\n0 0\n");
    assert_eq!(code(&cecac(&["generate", "--mode", "indset", "--graph", &bad, "--kprime", "1"])), 2);
}

#[test]
fn classify_reports_class() {
    let d = Dir::new();
    let e1 = d.file("e1.json", E1);
    let o = cecac(&["classify", &e1]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["recommended"], "chaindp");
    assert_eq!(v["max_attr_occurrence"], 2);
}

#[test]
fn bench_csv() {
    let d = Dir::new();
    let csv = d.path("empty.csv");
    assert_eq!(code(&cecac(&["bench", "--trials", "0", "--csv", &csv])), 0);
    assert_eq!(fs::read_to_string(&csv).unwrap(), "suite,solver,m,l,d,k,trials,agreements,max_ms\n");

    let o = cecac(&["bench", "--suite", "dichotomy", "--trials", "30", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let f: Vec<&str> = row.split(',').collect();
        assert_eq!(f[6], f[7], "{row}");
    }

    let o = cecac(&["bench", "--suite", "scaling", "--trials", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("scaling,treedp,500,500,100,25,1,1,"));

    let unwritable = Path::new(&d.path("no/such/dir")).join("x.csv");
    let o = cecac(&["bench", "--trials", "0", "--csv", unwritable.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn no_panics_on_odd_files() {
    let d = Dir::new();
    let dir: PathBuf = d.0.path().to_path_buf();
    for text in ["", "{}", "[]", "{\"attributes\": 3}", "\u{0}"] {
        let p = d.file("odd.json", text);
        let o = cecac(&["solve", &p]);
        assert_eq!(code(&o), 2, "{text:?}");
        assert!(!String::from_utf8_lossy(&o.stderr).contains("panicked"));
    }
    assert_eq!(code(&cecac(&["classify", dir.to_str().unwrap()])), 2);
}
