//! End-to-end tests of the `ruinprob` binary: output formats, exit codes,
//! and byte stability of the table artifact.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ruinprob"))
}

fn config_path(name: &str) -> String {
    format!("{}/../../configs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn plan_prints_the_reference_sample_size() {
    let out = run(&["plan", "--epsilon", "0.001", "--delta", "0.001"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "N = 3800452");
}

#[test]
fn plan_coarse_accuracy() {
    let out = run(&["plan", "--epsilon", "0.5", "--delta", "0.001"]);
    assert_eq!(stdout(&out).trim(), "N = 16");
}

#[test]
fn plan_rejects_zero_epsilon_as_usage_error() {
    let out = run(&["plan", "--epsilon", "0", "--delta", "0.001"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("epsilon"));
}

#[test]
fn bound_prints_r_hat() {
    let out = run(&[
        "bound",
        "--config",
        &config_path("exponential_degenerate.json"),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "R_hat = 0.195273");
}

#[test]
fn bound_json_carries_diagnostics() {
    let out = run(&["bound", "--config", &config_path("erlang.json"), "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!((v["r_hat"].as_f64().unwrap() - 0.349093).abs() < 1e-6);
    assert!(v["residual"].as_f64().unwrap().abs() < 1e-12);
    assert!(v["iterations"].as_u64().unwrap() > 0);
}

#[test]
fn devylder_prints_the_ruin_function() {
    let out = run(&[
        "devylder",
        "--config",
        &config_path("hyperexponential.json"),
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "psi_DV(x) = 0.597559 * exp(-0.111857 x)"
    );
}

#[test]
fn exact_prints_for_exponential_pair() {
    let out = run(&["exact", "--config", &config_path("exponential.json")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "psi(x) = 0.617458 * exp(-0.191271 x)");
}

#[test]
fn exact_is_inapplicable_to_erlang_with_dedicated_exit_code() {
    let out = run(&["exact", "--config", &config_path("erlang.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("exponential"));
}

#[test]
fn unreadable_config_exits_2() {
    let out = run(&["table", "--config", "/nonexistent/model.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr(&out).is_empty());
}

#[test]
fn malformed_config_exits_2() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"{ not json").unwrap();
    let out = run(&["exact", "--config", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_raises_no_positive_root_on_losing_model() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(
        br#"{
            "premium_rate": 1.0,
            "claim_intensity": 4.0,
            "claims": { "family": "exponential", "mean": 2.0 },
            "funds": { "family": "exponential", "mean": 0.5 },
            "x_grid": [0, 5]
        }"#,
    )
    .unwrap();
    let path = file.path().to_str().unwrap().to_owned();

    let out = run(&["bound", "--config", &path]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("no positive root"));

    // the same config still renders a table of ones
    let out = run(&["table", "--config", &path]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('x'))
    {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[1], "1.000000");
        assert_eq!(cells[2], "1.000000");
        assert_eq!(cells[4], "1.000000");
    }

    // exact reports certain ruin, exit 0
    let out = run(&["exact", "--config", &path]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("psi(x) = 1 for all x >= 0"));
}

#[test]
fn table_csv_is_byte_stable_and_carries_the_header_block() {
    let args = [
        "table",
        "--config",
        &config_path("erlang.json"),
        "--paths",
        "5000",
        "--seed",
        "7",
    ];
    let first = run(&args
        .map(String::from)
        .iter()
        .map(|s| s.as_str())
        .collect::<Vec<_>>());
    let second = run(&args
        .map(String::from)
        .iter()
        .map(|s| s.as_str())
        .collect::<Vec<_>>());
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    let text = stdout(&first);
    assert!(text.contains("# seed: 7"));
    assert!(text.contains("# n_paths: 5000"));
    assert!(text.contains("# r_hat: 0.349093"));
    assert!(text.contains("# psi_dv: 0.633017 * exp(-0.343624 x)"));
    assert!(text.contains("# truncation: surplus cap at x + "));
    assert!(text.contains("x,psi_hat,psi_dv,dv_rel_pct,lundberg,bound_rel_pct"));
}

#[test]
fn exponential_table_appends_the_exact_column() {
    let out = run(&[
        "table",
        "--config",
        &config_path("exponential.json"),
        "--paths",
        "2000",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("x,psi_hat,psi_dv,dv_rel_pct,lundberg,bound_rel_pct,exact"));
    // approximation coincides with the exact column on this family pair
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('x'))
    {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells[2], cells[6]);
    }
}

#[test]
fn markdown_table_mirrors_the_reference_layout() {
    let out = run(&[
        "table",
        "--config",
        &config_path("erlang.json"),
        "--output",
        "markdown",
        "--paths",
        "2000",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| x | psi_hat | psi_DV |"));
    assert!(text.contains("%"));
}

#[test]
fn simulate_prints_one_line_per_grid_point() {
    let out = run(&[
        "simulate",
        "--config",
        &config_path("exponential.json"),
        "--paths",
        "2000",
        "--x",
        "0",
        "--x",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("x = 0"));
    assert!(text.contains("psi_hat = "));
}

#[test]
fn simulate_json_is_machine_readable() {
    let out = run(&[
        "simulate",
        "--config",
        &config_path("exponential.json"),
        "--paths",
        "2000",
        "--x",
        "0",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let rec = &v.as_array().unwrap()[0];
    assert_eq!(rec["n_paths"].as_u64(), Some(2000));
    assert!(rec["psi_hat"].as_f64().unwrap() > 0.0);
    assert!(rec["hoeffding_radius"].as_f64().is_some());
}

#[test]
fn shipped_configs_all_parse() {
    for name in [
        "erlang.json",
        "hyperexponential.json",
        "exponential_degenerate.json",
        "exponential.json",
    ] {
        let out = run(&["devylder", "--config", &config_path(name)]);
        assert!(out.status.success(), "{name}: {}", stderr(&out));
    }
}
