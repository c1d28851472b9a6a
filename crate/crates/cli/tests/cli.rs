use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bistable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bistable"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn config(dir: &Path, body: &str) -> String {
    let path = dir.join("run.json");
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn classical_utility_default_csv() {
    let o = bistable(&["classical-utility"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "p,q,k,kprime,pi_a,pi_b,eps1,eps2,eps3,eps4");
    assert_eq!(lines.count(), 6 * 11 * 11);
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn csv_is_byte_identical_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let o = bistable(&["quantum", "--threads", "1", "--out", a.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = bistable(&["quantum", "--threads", "4", "--out", b.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn uniform_point_from_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(
        dir.path(),
        r#"{"scenario": {"mode": "symmetric", "k": 0.5},
            "axes": [{"name": "p", "values": [0.5]}, {"name": "q", "values": [0.5]}]}"#,
    );
    let o = bistable(&["classical-utility", "--config", &cfg, "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0][4], 2.25);
}

#[test]
fn config_errors_exit_2_and_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"grid": {"theta_points": 10}}"#, "grid.theta_points"),
        (r#"{"bogus": true}"#, "bogus"),
        (r#"{"axes": [{"name": "p", "values": []}]}"#, "axes[0].values"),
        (r#"{"axes": [{"name": "p", "min": 0, "max": 1, "steps": 0}]}"#, "axes[0].steps"),
        (r#"{"scenario": {"mode": "one_rational"}}"#, "scenario"),
        ("{\n  \"seed\": \n}", "line 3"),
    ];
    for (body, field) in cases {
        let cfg = config(dir.path(), body);
        let o = bistable(&["classical-utility", "--config", &cfg]);
        assert_eq!(o.status.code(), Some(2), "{body}: {}", stderr(&o));
        assert!(stderr(&o).contains(field), "{body}: {}", stderr(&o));
    }
}

#[test]
fn zero_threads_is_a_config_error() {
    let o = bistable(&["delta-m", "--threads", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--threads"));
}

#[test]
fn missing_config_file_is_a_config_error() {
    let o = bistable(&["ne", "--config", "/nonexistent/run.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--config"));
}

#[test]
fn domain_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), r#"{"axes": [{"name": "b_over_c", "values": [0.5]}]}"#);
    let o = bistable(&["delta-m", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("b_over_c"));
}

#[test]
fn quasi_probability_refusal_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(
        dir.path(),
        r#"{"engine": "quantum", "scenario": {"mode": "complementary", "k": 0.9}, "trials": 100}"#,
    );
    let o = bistable(&["simulate", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(4), "{}", stderr(&o));
    assert!(stderr(&o).contains("-1/3"));
}

#[test]
fn simulate_is_seeded_and_thread_independent() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), r#"{"point": {"p": 0.3, "q": 0.6}, "scenario": {"mode": "symmetric", "k": 0.7}, "trials": 200000}"#);
    let run = |seed: &str, threads: &str| {
        let o = bistable(&["simulate", "--config", &cfg, "--seed", seed, "--threads", threads]);
        assert!(o.status.success(), "{}", stderr(&o));
        stdout(&o)
    };
    assert_eq!(run("11", "1"), run("11", "4"));
    assert_ne!(run("11", "2"), run("12", "2"));
    let v: Value = serde_json::from_str(&run("11", "2")).unwrap();
    assert_eq!(v["trials"], 200000);
    assert_eq!(v["seed"], 11);
}

#[test]
fn ne_json_and_csv() {
    let o = bistable(&["ne"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let scenarios = v["scenarios"].as_array().unwrap();
    assert_eq!(scenarios.len(), 4);
    assert_eq!(scenarios[0]["equilibria"].as_array().unwrap().len(), 3);

    let o = bistable(&["ne", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("scenario,k,kprime,candidate,p,q,alice_condition,bob_condition,equilibrium,note\n"));
    assert_eq!(text.lines().count(), 21);
}

#[test]
fn verify_claims_writes_json_and_text() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(dir.path(), r#"{"grid": {"theta_points": 61}}"#);
    let out = dir.path().join("claims.json");
    let o = bistable(&["verify-claims", "--config", &cfg, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["total"], 50);
    assert_eq!(v["settings"]["theta_points"], 61);
    let text = std::fs::read_to_string(dir.path().join("claims.json.txt")).unwrap();
    assert!(text.starts_with("50 claims:"));
    assert!(text.contains("[refuted_on_grid] pd.rational-single-ne"));
}

#[test]
fn output_path_from_config_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let from_cfg = dir.path().join("cfg.csv");
    let from_flag = dir.path().join("flag.json");
    let cfg = config(
        dir.path(),
        &format!(
            r#"{{"output": {{"path": "{}", "format": "csv"}}, "axes": [{{"name": "k", "values": [1.0]}}]}}"#,
            from_cfg.display()
        ),
    );
    let o = bistable(&["delta-m", "--config", &cfg]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(std::fs::read_to_string(&from_cfg).unwrap().starts_with("k,b_over_c,delta_m\n"));
    let o = bistable(&["delta-m", "--config", &cfg, "--out", from_flag.to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&from_flag).unwrap()).unwrap();
    assert_eq!(v["columns"][2], "delta_m");
}

#[test]
fn closed_stdout_is_not_an_error() {
    use std::io::Read;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_bistable"))
        .arg("quantum")
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut first = [0u8; 16];
    child.stdout.take().unwrap().read_exact(&mut first).unwrap();
    let mut err = String::new();
    child.stderr.take().unwrap().read_to_string(&mut err).unwrap();
    let status = child.wait().unwrap();
    assert!(status.success(), "{err}");
    assert!(!err.contains("panicked"), "{err}");
}
