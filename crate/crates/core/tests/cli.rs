use std::path::Path;
use std::process::{Command, Output};

use gainspec::cli::format;
use serde_json::Value;
use tempfile::TempDir;

fn gainspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gainspec"))
        .args(args)
        .env_remove("GAINSPEC_SEED")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_k22() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "k22.ugg",
        "# all-ones K22\nugg 4\n0 2 0\n0 3 0\n1 2 0\n1 3 0\n",
    );
    let out = gainspec(&["analyze", &file]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!((r["energy"].as_f64().unwrap() - 4.0).abs() < 1e-10);
    assert_eq!(r["mu"], 2);
    assert_eq!(r["numerically_tight"], true);
    assert_eq!(r["structurally_extremal"], true);
    assert_eq!(r["consistent"], true);
    assert_eq!(r["balanced"], true);
    assert_eq!(r["balance_witness"]["kind"], "switching");
    assert_eq!(r["components"], serde_json::json!([[0, 1, 2, 3]]));
    // the report deserializes back into its own type
    let back: gainspec::cli::report::AnalysisReport = serde_json::from_value(r).unwrap();
    assert_eq!(back.n, 4);
}

#[test]
fn analyze_c6tilde_and_unbalanced_inputs() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "c6t.ugg",
        "ugg 6\n0 1 0\n1 2 0\n2 3 0\n3 4 0\n4 5 0\n0 5 0\n1 4 0\n",
    );
    let out = gainspec(&["analyze", &file]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["gap"].as_f64().unwrap() > 1e-3);
    assert_eq!(r["numerically_tight"], false);

    // any real angle is valid; a triangle with angle 5 is unbalanced
    let file = write(&dir, "tri.ugg", "ugg 3\n0 1 5\n1 2 0\n0 2 0\n");
    let r = json(&gainspec(&["analyze", &file]));
    assert_eq!(r["balanced"], false);
    assert_eq!(r["balance_witness"]["kind"], "unbalanced-cycle");
}

#[test]
fn analyze_text_format() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "p4.ugg", "ugg 4\n0 1 0\n1 2 0\n2 3 0\n");
    let out = gainspec(&["analyze", &file, "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("mu: 2"));
    assert!(text.contains("structurally_extremal: false"));
    assert!(text.contains("consistent: true"));
}

#[test]
fn parse_errors_exit_nonzero_with_line() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "loop.ugg", "ugg 3\n# comment\n0 1 0\n2 2 0.5\n");
    let out = gainspec(&["analyze", &file]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4"), "{err}");
    let out = gainspec(&["analyze", &dir.path().join("missing.ugg").to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lemmas_small_and_empty() {
    let out = gainspec(&["lemmas", "--seed", "42", "--trials", "40", "--nmax", "4"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let r = json(&out);
    assert_eq!(r["violations"], 0);
    assert_eq!(r["config"]["nmax"], 4);
    assert_eq!(r["lemmas"].as_array().unwrap().len(), 7);

    let out = gainspec(&["lemmas", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["lemmas"]
        .as_array()
        .unwrap()
        .iter()
        .all(|l| l["instances"] == 0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning:"));
}

#[test]
fn generate_kinds_and_round_trip() {
    let dir = TempDir::new().unwrap();
    let out = gainspec(&["generate", "knn", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let phi = format::parse(&stdout(&out)).unwrap();
    assert_eq!((phi.n(), phi.m()), (6, 9));
    assert_eq!(phi.max_deviation_from_one(), 0.0);

    for args in [
        vec!["cycle", "7", "--random-gains"],
        vec!["path", "5"],
        vec!["c6tilde", "--switched"],
        vec!["gnp", "9", "0.4", "--random-gains"],
        vec!["extremal-union", "3,1", "--switched"],
    ] {
        let path = dir.path().join(format!("{}.ugg", args[0]));
        let p = path.to_str().unwrap();
        let mut full = vec!["generate"];
        full.extend(&args);
        full.extend(["--seed", "3", "--out", p]);
        let out = gainspec(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let phi = format::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let back = format::parse(&format::serialize(&phi)).unwrap();
        assert_eq!(back.graph(), phi.graph());
        for (u, v, z) in phi.gained_edges() {
            assert!(back.gain(u, v).unwrap().distance(z) <= 1e-12, "{args:?}");
        }
    }

    assert_eq!(gainspec(&["generate", "gnp", "8"]).status.code(), Some(2));
    assert_eq!(gainspec(&["generate", "wheel", "8"]).status.code(), Some(2));
}

#[test]
fn generate_is_deterministic_and_honours_seed_env() {
    let a = gainspec(&["generate", "gnp", "8", "0.5", "--seed", "1"]);
    let b = gainspec(&["generate", "gnp", "8", "0.5", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);

    let flag = gainspec(&[
        "generate",
        "extremal-union",
        "2,2",
        "--switched",
        "--seed",
        "7",
    ]);
    let env = Command::new(env!("CARGO_BIN_EXE_gainspec"))
        .args(["generate", "extremal-union", "2,2", "--switched"])
        .env("GAINSPEC_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
    let default = gainspec(&["generate", "extremal-union", "2,2", "--switched"]);
    assert_ne!(flag.stdout, default.stdout);
    // an explicit flag wins over the variable
    let both = Command::new(env!("CARGO_BIN_EXE_gainspec"))
        .args([
            "generate",
            "extremal-union",
            "2,2",
            "--switched",
            "--seed",
            "42",
        ])
        .env("GAINSPEC_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(both.stdout, default.stdout);
}

#[test]
fn switched_union_analyzes_as_tight_and_extremal() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("u.ugg");
    let p = path.to_str().unwrap();
    let out = gainspec(&[
        "generate",
        "extremal-union",
        "2,2",
        "--switched",
        "--seed",
        "7",
        "--out",
        p,
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        format::parse(&std::fs::read_to_string(&path).unwrap())
            .unwrap()
            .max_deviation_from_one()
            > 1e-3
    );
    let out = gainspec(&["analyze", p]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["numerically_tight"], true);
    assert_eq!(r["structurally_extremal"], true);
    assert!(r["gap"].as_f64().unwrap().abs() < 1e-8);
}

fn double(dir: &TempDir, input: &str) -> (Value, gainspec::gain::GainGraph) {
    let src = write(dir, "in.ugg", input);
    let dst = dir.path().join("out.ugg");
    let out = gainspec(&["double", &src, "--out", dst.to_str().unwrap()]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let phi = format::parse(&std::fs::read_to_string(Path::new(&dst)).unwrap()).unwrap();
    (json(&out), phi)
}

#[test]
fn double_examples() {
    let dir = TempDir::new().unwrap();
    let (r, d) = double(&dir, "ugg 3\n0 1 0\n1 2 0\n0 2 0\n");
    assert!((r["double_energy"].as_f64().unwrap() - 8.0).abs() < 1e-10);
    assert!((r["energy"].as_f64().unwrap() - 4.0).abs() < 1e-10);
    assert_eq!((d.n(), d.m()), (6, 6));
    assert!(d.graph().is_connected() && (0..6).all(|v| d.graph().degree(v) == 2));

    let (r, d) = double(&dir, "ugg 2\n0 1 0.3\n");
    assert!((r["double_energy"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    assert_eq!(d.graph().components().len(), 2);

    let (r, d) = double(&dir, "ugg 0\n");
    assert_eq!(r["double_energy"].as_f64().unwrap(), 0.0);
    assert_eq!(d.n(), 0);

    // without --out the file goes to stdout, the report to stderr
    let src = write(&dir, "k2.ugg", "ugg 2\n0 1 0\n");
    let out = gainspec(&["double", &src]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(format::parse(&stdout(&out)).unwrap().m(), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("double_energy"));
}

#[test]
fn double_enforces_size_limit() {
    let dir = TempDir::new().unwrap();
    let ok = write(&dir, "32.ugg", "ugg 32\n0 1 0\n");
    assert_eq!(gainspec(&["double", &ok]).status.code(), Some(0));
    let big = write(&dir, "33.ugg", "ugg 33\n0 1 0\n");
    let out = gainspec(&["double", &big]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit"));
}
