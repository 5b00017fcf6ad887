//! End-to-end tests of the `extensors` binary: exit codes, the JSON report
//! contract, determinism across runs and thread counts, and the seed
//! environment variable.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_extensors"));
    // Isolate every test from the ambient environment; tests that exercise
    // the variable set it explicitly.
    cmd.env_remove("EXTENSORS_SEED");
    cmd
}

fn write_file(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).expect("write fixture");
    path
}

fn run(cmd: &mut Command) -> (Option<i32>, String, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = cmd.output().expect("spawn binary");
    (
        status.code(),
        String::from_utf8(stdout).expect("utf-8 stdout"),
        String::from_utf8(stderr).expect("utf-8 stderr"),
    )
}

/// Parses the single JSON report line a successful run prints.
fn report(stdout: &str) -> Value {
    let line = stdout.trim();
    assert!(
        !line.is_empty() && !line.contains('\n'),
        "expected exactly one report line, got {stdout:?}"
    );
    serde_json::from_str(line).expect("report is valid JSON")
}

/// The report with its wall-clock field blanked, for determinism checks.
fn result_fields(stdout: &str) -> Value {
    let mut v = report(stdout);
    v["wall_ms"] = json!(null);
    v
}

const THREE_PATH: &str = "p directed 3 2\n1 2\n2 3\n";
const EDGELESS_2: &str = "p directed 2 0\n";
const TWO_DISJOINT_3_PATHS: &str = "p directed 6 4\n1 2\n2 3\n4 5\n5 6\n";
const FOUR_CYCLE: &str = "p directed 4 4\n1 2\n2 3\n3 4\n4 1\n";

#[test]
fn detect_finds_a_path_and_exits_zero() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", THREE_PATH);
    let (code, stdout, stderr) = run(bin()
        .args(["detect", "--k", "3", "--mode", "deterministic"])
        .arg(&g));
    assert_eq!(code, Some(0), "stderr: {stderr}");
    let v = report(&stdout);
    assert_eq!(v["command"], json!("detect"));
    assert_eq!(v["result"]["found"], json!(true));
    assert_eq!(v["parameters"]["k"], json!(3));
    assert!(stderr.contains("found"));
}

#[test]
fn detect_reports_absence_with_exit_one_in_every_mode() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", EDGELESS_2);
    for mode in [
        "unambiguous",
        "deterministic",
        "random-edge",
        "representative",
        "few:3",
    ] {
        let (code, stdout, stderr) =
            run(bin().args(["detect", "--k", "2", "--mode", mode]).arg(&g));
        assert_eq!(code, Some(1), "mode {mode}: stderr: {stderr}");
        assert_eq!(report(&stdout)["result"]["found"], json!(false), "mode {mode}");
    }
}

#[test]
fn detect_few_mode_honors_its_promise() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", TWO_DISJOINT_3_PATHS);
    let (code, stdout, _) = run(bin().args(["detect", "--k", "3", "--mode", "few:2"]).arg(&g));
    assert_eq!(code, Some(0));
    let v = report(&stdout);
    assert_eq!(v["result"]["found"], json!(true));
    assert_eq!(v["parameters"]["c"], json!(2));
}

#[test]
fn detect_handles_k_beyond_the_vertex_count() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", THREE_PATH);
    let (code, stdout, _) = run(bin().args(["detect", "--k", "5"]).arg(&g));
    assert_eq!(code, Some(1));
    assert_eq!(report(&stdout)["result"]["found"], json!(false));
}

fn count_paths_cmd(g: &Path, seed: &str) -> Command {
    let mut cmd = bin();
    cmd.args(["count-paths", "--k", "3", "--trials", "50", "--seed", seed])
        .arg(g);
    cmd
}

#[test]
fn count_paths_is_deterministic_for_a_fixed_seed() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", FOUR_CYCLE);
    let (c1, out1, _) = run(&mut count_paths_cmd(&g, "7"));
    let (c2, out2, _) = run(&mut count_paths_cmd(&g, "7"));
    assert_eq!(c1, Some(0));
    assert_eq!(c2, Some(0));
    assert_eq!(result_fields(&out1), result_fields(&out2));

    let (c3, out3, _) = run(&mut count_paths_cmd(&g, "8"));
    assert_eq!(c3, Some(0));
    assert_eq!(
        report(&out3)["parameters"]["seed"],
        json!(8),
        "seed flag must be recorded"
    );
}

#[test]
fn count_paths_thread_count_never_changes_results() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", FOUR_CYCLE);
    let mut single = count_paths_cmd(&g, "3");
    single.args(["--jobs", "1"]);
    let mut many = count_paths_cmd(&g, "3");
    many.args(["--jobs", "4"]);
    let (c1, out1, _) = run(&mut single);
    let (c2, out2, _) = run(&mut many);
    assert_eq!(c1, Some(0));
    assert_eq!(c2, Some(0));
    assert_eq!(result_fields(&out1), result_fields(&out2));
}

#[test]
fn count_paths_estimates_zero_without_edges() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", "p directed 3 0\n");
    let (code, stdout, _) = run(bin()
        .args(["count-paths", "--k", "2", "--trials", "20"])
        .arg(&g));
    assert_eq!(code, Some(0));
    let v = report(&stdout);
    assert_eq!(v["result"]["estimate"], json!("0"));
    assert_eq!(v["trials"]["nonzero"], json!(0));
}

#[test]
fn count_paths_accepts_the_heavier_tailed_distribution() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", FOUR_CYCLE);
    let (code, stdout, _) = run(bin()
        .args([
            "count-paths",
            "--k",
            "3",
            "--trials",
            "30",
            "--dist",
            "sqrt3",
            "--seed",
            "2",
        ])
        .arg(&g));
    assert_eq!(code, Some(0));
    assert_eq!(report(&stdout)["parameters"]["dist"], json!("sqrt3"));
}

#[test]
fn count_sub_single_vertex_pattern_counts_host_vertices_exactly() {
    let dir = TempDir::new().unwrap();
    let pattern = write_file(&dir, "h.txt", "p directed 1 0\n");
    let host = write_file(&dir, "g.txt", FOUR_CYCLE);
    let (code, stdout, _) = run(bin()
        .args(["count-sub", "--trials", "32"])
        .arg(&pattern)
        .arg(&host));
    assert_eq!(code, Some(0));
    let v = report(&stdout);
    assert_eq!(v["command"], json!("count-sub"));
    assert_eq!(v["result"]["estimate"], json!("4"));
    assert_eq!(v["result"]["aut"], json!(1));
    assert_eq!(v["result"]["width"], json!(0));
}

#[test]
fn count_sub_pattern_larger_than_host_estimates_zero() {
    let dir = TempDir::new().unwrap();
    let pattern = write_file(&dir, "h.txt", THREE_PATH);
    let host = write_file(&dir, "g.txt", EDGELESS_2);
    let (code, stdout, _) = run(bin().args(["count-sub"]).arg(&pattern).arg(&host));
    assert_eq!(code, Some(0));
    let v = report(&stdout);
    assert_eq!(v["result"]["estimate"], json!("0"));
    assert_eq!(v["trials"]["sampled"], json!(0));
}

#[test]
fn count_sub_accepts_a_decomposition_file() {
    let dir = TempDir::new().unwrap();
    let pattern = write_file(&dir, "h.txt", THREE_PATH);
    let host = write_file(
        &dir,
        "g.txt",
        "p directed 4 12\n1 2\n2 1\n1 3\n3 1\n1 4\n4 1\n2 3\n3 2\n2 4\n4 2\n3 4\n4 3\n",
    );
    let td = write_file(&dir, "h.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    let (code, stdout, stderr) = run(bin()
        .args(["count-sub", "--trials", "200", "--seed", "1", "--td"])
        .arg(&td)
        .arg(&pattern)
        .arg(&host));
    assert_eq!(code, Some(0), "stderr: {stderr}");
    let v = report(&stdout);
    assert_eq!(v["parameters"]["td_source"], json!("file"));
    assert_eq!(v["result"]["width"], json!(1));
    assert_eq!(v["result"]["aut"], json!(1));
    assert_eq!(v["inputs"].as_array().unwrap().len(), 3);
}

#[test]
fn count_sub_rejects_a_decomposition_for_the_wrong_pattern() {
    let dir = TempDir::new().unwrap();
    let pattern = write_file(&dir, "h.txt", THREE_PATH);
    let host = write_file(&dir, "g.txt", FOUR_CYCLE);
    let td = write_file(&dir, "h.td", "s td 1 2 2\nb 1 1 2\n");
    let (code, stdout, stderr) = run(bin()
        .args(["count-sub", "--td"])
        .arg(&td)
        .arg(&pattern)
        .arg(&host));
    assert_eq!(code, Some(2));
    assert!(stdout.is_empty());
    assert!(stderr.contains("error"));
}

const SQUARED_SUM_CIRCUIT: &str = "\
g1 = input 1
g2 = input 2
g3 = add g1 g2
g4 = mul g3 g3
output g4
";

const CANCELLING_CIRCUIT: &str = "\
g1 = input 1
g2 = input 2
g3 = mul g1 g2
g4 = const -1
g5 = mul g3 g4
g6 = add g3 g5
output g6
";

#[test]
fn detect_multilinear_finds_the_cross_term_of_a_squared_sum() {
    let dir = TempDir::new().unwrap();
    let c = write_file(&dir, "c.txt", SQUARED_SUM_CIRCUIT);
    let (code, stdout, _) = run(bin().args(["detect-multilinear", "--k", "2"]).arg(&c));
    assert_eq!(code, Some(0));
    let v = report(&stdout);
    assert_eq!(v["result"]["found"], json!(true));
    assert!(v["trials"]["count"].as_u64().unwrap() > 0);
}

#[test]
fn detect_multilinear_rejects_a_cancelled_term() {
    let dir = TempDir::new().unwrap();
    let c = write_file(&dir, "c.txt", CANCELLING_CIRCUIT);
    let (code, stdout, _) = run(bin().args(["detect-multilinear", "--k", "2"]).arg(&c));
    assert_eq!(code, Some(1));
    assert_eq!(report(&stdout)["result"]["found"], json!(false));
}

#[test]
fn detect_multilinear_answers_no_above_the_variable_count() {
    let dir = TempDir::new().unwrap();
    let c = write_file(&dir, "c.txt", SQUARED_SUM_CIRCUIT);
    let (code, stdout, _) = run(bin().args(["detect-multilinear", "--k", "3"]).arg(&c));
    assert_eq!(code, Some(1));
    let v = report(&stdout);
    assert_eq!(v["result"]["found"], json!(false));
    assert_eq!(v["trials"]["count"], json!(0));
}

#[test]
fn the_seed_environment_variable_supplies_the_default() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", FOUR_CYCLE);

    let mut via_env = bin();
    via_env
        .args(["count-paths", "--k", "3", "--trials", "40"])
        .arg(&g)
        .env("EXTENSORS_SEED", "9");
    let mut via_flag = bin();
    via_flag
        .args(["count-paths", "--k", "3", "--trials", "40", "--seed", "9"])
        .arg(&g);
    let (c1, out1, _) = run(&mut via_env);
    let (c2, out2, _) = run(&mut via_flag);
    assert_eq!(c1, Some(0));
    assert_eq!(c2, Some(0));
    assert_eq!(result_fields(&out1), result_fields(&out2));
    assert_eq!(report(&out1)["parameters"]["seed"], json!(9));

    // An explicit flag wins over the environment.
    let mut both = count_paths_cmd(&g, "9");
    both.env("EXTENSORS_SEED", "5");
    let (c3, out3, _) = run(&mut both);
    assert_eq!(c3, Some(0));
    assert_eq!(report(&out3)["parameters"]["seed"], json!(9));

    // A malformed value is a reported error, not a silent fallback.
    let mut bad = bin();
    bad.args(["count-paths", "--k", "3"])
        .arg(&g)
        .env("EXTENSORS_SEED", "not-a-number");
    let (c4, _, stderr) = run(&mut bad);
    assert_eq!(c4, Some(2));
    assert!(stderr.contains("EXTENSORS_SEED"));
}

#[test]
fn reports_carry_input_digests() {
    let dir = TempDir::new().unwrap();
    let g = write_file(&dir, "g.txt", THREE_PATH);
    let (_, stdout, _) = run(bin().args(["detect", "--k", "2"]).arg(&g));
    let v = report(&stdout);
    let inputs = v["inputs"].as_array().unwrap();
    assert_eq!(inputs.len(), 1);
    let sha = inputs[0]["sha256"].as_str().unwrap();
    assert_eq!(sha.len(), 64);
    assert!(sha.chars().all(|c| c.is_ascii_hexdigit()));
    assert!(inputs[0]["path"].as_str().unwrap().ends_with("g.txt"));
}

#[test]
fn missing_and_malformed_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let (code, stdout, stderr) = run(bin().args(["detect", "--k", "2", "no-such-file.txt"]));
    assert_eq!(code, Some(2));
    assert!(stdout.is_empty());
    assert!(stderr.contains("error"));

    let g = write_file(&dir, "g.txt", "q directed 2 0\n");
    let (code, _, stderr) = run(bin().args(["detect", "--k", "2"]).arg(&g));
    assert_eq!(code, Some(2));
    assert!(stderr.contains("error"));

    let g2 = write_file(&dir, "g2.txt", THREE_PATH);
    let (code, _, stderr) = run(bin().args(["detect", "--k", "2", "--mode", "nonsense"]).arg(&g2));
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unknown mode"));
}

#[test]
fn bench_walk_suite_shows_op_counts_linear_in_edges() {
    let (code, stdout, _) = run(bin().args(["bench", "--suite", "walk"]));
    assert_eq!(code, Some(0));
    assert!(stdout.contains("walk_sum"));
    // Data rows: m, muls, adds, total, ops/m — the last column must be flat.
    let ratios: Vec<f64> = stdout
        .lines()
        .filter_map(|l| {
            let fields: Vec<&str> = l.split_whitespace().collect();
            if fields.len() == 5 && fields[0].parse::<u64>().is_ok() {
                fields[4].parse::<f64>().ok()
            } else {
                None
            }
        })
        .collect();
    assert_eq!(ratios.len(), 4, "bench table rows in {stdout:?}");
    let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
    assert!(
        max / min < 1.5,
        "ops per edge should be flat, got {ratios:?}"
    );
}
