use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn jsob() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_jsob"));
    for key in ["JSOB_CONFIG", "JSOB_DEFAULT_K", "JSOB_OUTPUT_FORMAT", "JSOB_CACHE_PATH", "JSOB_FLOAT_DIGITS"] {
        cmd.env_remove(key);
    }
    cmd
}

fn run(args: &[&str]) -> Output {
    jsob().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(&[args, &["--format", "json"]].concat());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn csv_rows(args: &[&str]) -> Vec<Vec<String>> {
    let out = run(&[args, &["--format", "csv"]].concat());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

const TABLE: [[u64; 9]; 9] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 2, 4, 8, 16, 32, 64],
    [0, 0, 0, 1, 8, 52, 320, 1936, 11648],
    [0, 0, 0, 0, 1, 20, 292, 3824, 47824],
    [0, 0, 0, 0, 0, 1, 40, 1092, 25664],
    [0, 0, 0, 0, 0, 0, 1, 70, 3192],
    [0, 0, 0, 0, 0, 0, 0, 1, 112],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
];

#[test]
fn stirling_single_entry() {
    let out = run(&["stirling", "--max-n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn stirling_table_csv() {
    let rows = csv_rows(&["stirling", "--max-n", "8"]);
    assert_eq!(rows.len(), 9);
    for (row, expected) in rows.iter().zip(TABLE) {
        let expected: Vec<String> = expected.iter().map(u64::to_string).collect();
        assert_eq!(row, &expected);
    }
}

#[test]
fn stirling_rejects_out_of_range() {
    for bad in ["-1", "65", "x"] {
        let out = run(&["stirling", "--max-n", bad]);
        assert_eq!(out.status.code(), Some(2), "max-n {bad}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("--max-n"));
    }
}

#[test]
fn poly_examples() {
    let p1 = json(&["poly", "--n", "1", "--alpha", "-1", "--beta", "-1", "--normalization", "phi"]);
    assert_eq!(p1["scaleSquared"], "1/3");
    assert_eq!(strings(&p1["coefficients"]), ["0", "1"]);
    let p2 = json(&["poly", "--n", "2", "--alpha", "-1", "--beta", "-1", "--normalization", "phi"]);
    assert_eq!(p2["scaleSquared"], "6");
    assert_eq!(strings(&p2["coefficients"]), ["-1/4", "0", "1/4"]);
}

#[test]
fn poly_undefined_requests() {
    let l2 = run(&["poly", "--n", "0", "--alpha", "-1", "--beta", "-1", "--normalization", "l2"]);
    assert_eq!(l2.status.code(), Some(3));
    let mixed = run(&["poly", "--n", "2", "--alpha", "-1", "--beta", "0"]);
    assert_eq!(mixed.status.code(), Some(3));
    let phi = run(&["poly", "--n", "2", "--alpha", "1", "--beta", "1", "--normalization", "phi"]);
    assert_eq!(phi.status.code(), Some(3));
    let garbage = run(&["poly", "--n", "2", "--alpha", "one"]);
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn gram_phi_identity() {
    let g = json(&["gram", "--ip", "phi", "--max-degree", "10"]);
    assert_eq!(g["identity"], true);
    let entries = g["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 11);
    for (i, row) in entries.iter().enumerate() {
        for (j, e) in strings(row).iter().enumerate() {
            assert_eq!(e, if i == j { "1" } else { "0" });
        }
    }
}

#[test]
fn spectrum_of_t() {
    let s = json(&["spectrum", "--operator", "T", "--k", "1", "--count", "5"]);
    let values: Vec<&str> = s["points"].as_array().unwrap().iter().map(|p| p["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["1", "1", "3", "7", "13"]);
}

#[test]
fn spectrum_with_galerkin() {
    let s = json(&["spectrum", "--operator", "A", "--k", "1", "--count", "4", "--galerkin", "30"]);
    for p in s["points"].as_array().unwrap() {
        let err: f64 = p["absError"].as_str().unwrap().parse().unwrap();
        assert!(err < 1e-6, "{p}");
    }
    assert_eq!(run(&["spectrum", "--operator", "T", "--galerkin", "10"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--operator", "B0"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--operator", "A", "--k", "-1"]).status.code(), Some(2));
}

#[test]
fn chel_cases() {
    let w = json(&["chel", "--case", "w1v1", "--grid", "2000"]);
    let max: f64 = w["kMaxSquared"].as_str().unwrap().parse().unwrap();
    assert!((max - (-1f64).exp()).abs() < 1e-9);
    assert_eq!(run(&["chel", "--case", "divergent", "--grid", "1000"]).status.code(), Some(4));
    assert_eq!(run(&["chel", "--case", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["chel", "--grid", "10"]).status.code(), Some(2));
}

#[test]
fn float_digits_control_precision() {
    let short = json(&["chel", "--case", "unit", "--grid", "1000", "--float-digits", "6"]);
    assert_eq!(short["kMax"], "0.500000");
    assert_eq!(run(&["chel", "--case", "unit", "--float-digits", "3"]).status.code(), Some(2));
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "--suite", "all", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], true);
    assert!(report["checks"].as_array().unwrap().len() >= 18);
}

#[test]
fn verify_rejects_unknown_suite() {
    assert_eq!(run(&["verify", "--suite", "everything"]).status.code(), Some(2));
}

#[test]
fn csv_and_json_agree() {
    let stirling = json(&["stirling", "--max-n", "6"]);
    let rows: Vec<Vec<String>> = stirling["rows"].as_array().unwrap().iter().map(strings).collect();
    assert_eq!(rows, csv_rows(&["stirling", "--max-n", "6"]));

    let gram = json(&["gram", "--ip", "left-definite", "--n", "2", "--k", "1/2", "--max-degree", "6"]);
    let entries: Vec<Vec<String>> = gram["entries"].as_array().unwrap().iter().map(strings).collect();
    assert_eq!(entries, csv_rows(&["gram", "--ip", "left-definite", "--n", "2", "--k", "1/2", "--max-degree", "6"]));

    let args = ["poly", "--n", "5", "--alpha", "1/2", "--beta", "2"];
    let record = json(&args);
    let rows = csv_rows(&args);
    assert_eq!(rows[0], ["alpha", "beta", "n", "normalization", "scaleSquared", "coefficients"]);
    let coefficients: Vec<String> = rows[1][5].split(' ').map(str::to_string).collect();
    assert_eq!(rows[1][..5], [record["alpha"].as_str().unwrap(), record["beta"].as_str().unwrap(), "5", "reference", record["scaleSquared"].as_str().unwrap()]);
    assert_eq!(coefficients, strings(&record["coefficients"]));

    let args = ["spectrum", "--operator", "A", "--k", "1", "--count", "4", "--galerkin", "12"];
    let s = json(&args);
    let rows = csv_rows(&args);
    for (p, row) in s["points"].as_array().unwrap().iter().zip(&rows[1..]) {
        assert_eq!(row, &[p["index"].to_string(), p["value"].as_str().unwrap().into(), p["numeric"].as_str().unwrap().into(), p["absError"].as_str().unwrap().into()]);
    }

    let args = ["chel", "--case", "dirichlet", "--grid", "1000"];
    let c = json(&args);
    let rows = csv_rows(&args);
    assert_eq!(rows[1], ["dirichlet", "1000", c["kMax"].as_str().unwrap(), c["kMaxSquared"].as_str().unwrap(), c["argmax"].as_str().unwrap()]);
}

#[test]
fn cache_never_changes_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let cache_arg = cache.to_str().unwrap();
    for (n, norm) in [("4", "phi"), ("6", "l2"), ("3", "reference")] {
        let args = ["poly", "--n", n, "--normalization", norm, "--format", "json"];
        let plain = run(&args);
        let cold = run(&[&args[..], &["--cache", cache_arg]].concat());
        let warm = run(&[&args[..], &["--cache", cache_arg]].concat());
        assert_eq!(plain.stdout, cold.stdout);
        assert_eq!(plain.stdout, warm.stdout);
    }
    let stored: Value = serde_json::from_str(&fs::read_to_string(&cache).unwrap()).unwrap();
    assert!(stored.get("(-1,-1,4,phi)").is_some());
    assert_eq!(stored.as_object().unwrap().len(), 3);
}

#[test]
fn corrupt_cache_is_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    fs::write(&cache, "{ not json").unwrap();
    let args = ["poly", "--n", "3", "--normalization", "phi", "--format", "json"];
    let plain = run(&args);
    let out = run(&[&args[..], &["--cache", cache.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, plain.stdout);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    // A tampered entry is ignored rather than trusted.
    let tampered = r#"{"(-1,-1,3,phi)": {"alpha":"-1","beta":"-1","n":3,"normalization":"phi","scaleSquared":"5","coefficients":["1"]}, "(-1,-1,2,phi)": {"alpha":"0","beta":"-1","n":2,"normalization":"phi","scaleSquared":"5","coefficients":["1"]}}"#;
    fs::write(&cache, tampered).unwrap();
    let out = run(&[&args[..], &["--cache", cache.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    let args2 = ["poly", "--n", "2", "--normalization", "phi", "--format", "json"];
    let out2 = run(&[&args2[..], &["--cache", cache.to_str().unwrap()]].concat());
    assert_eq!(out2.stdout, run(&args2).stdout);
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("jsob.conf");
    fs::write(&config, "# defaults\noutput_format = csv\ndefault_k = 2\n").unwrap();
    let conf = config.to_str().unwrap();
    let args = ["spectrum", "--operator", "A", "--count", "2", "--config", conf];

    // Config alone: csv with k = 2.
    let out = stdout(&run(&args));
    assert_eq!(out, "index,value\n2,4\n3,8\n");

    // A flag beats the config.
    let out = stdout(&run(&[&args[..], &["--format", "json"]].concat()));
    assert!(out.trim_start().starts_with('{'));

    // The environment beats both.
    let out = jsob()
        .args([&args[..], &["--format", "json"]].concat())
        .env("JSOB_OUTPUT_FORMAT", "pretty")
        .env("JSOB_DEFAULT_K", "0")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "index  value\n    2      2\n    3      6\n");

    // An explicit --k is a query argument, not the default.
    let out = stdout(&run(&[&args[..], &["--k", "1"]].concat()));
    assert_eq!(out, "index,value\n2,3\n3,7\n");
}

#[test]
fn bad_config_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.conf");
    fs::write(&config, "colour = blue\n").unwrap();
    let out = run(&["stirling", "--max-n", "2", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = run(&["stirling", "--max-n", "2", "--config", "/nonexistent/jsob.conf"]);
    assert_eq!(missing.status.code(), Some(2));
}
