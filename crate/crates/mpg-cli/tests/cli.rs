use std::path::PathBuf;
use std::process::{Command, Output};

use mpg_arena::load_arena;
use mpg_cli::{
    bench, credits_report, verify_report, Algorithm, BenchConfig, BenchRow, SolveReport,
};
use serde_json::Value;

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/gamma_ex.mpg")
}

fn mpg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mpg"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn gen_is_deterministic() {
    let a = stdout(&mpg(&["gen", "-n", "5", "-W", "3", "-s", "42"]));
    let b = stdout(&mpg(&["gen", "-n", "5", "-W", "3", "-s", "42"]));
    assert_eq!(a, b);
    let arena = load_arena(&a).unwrap();
    assert_eq!(arena.n(), 5);
    let one = load_arena(&stdout(&mpg(&["gen", "-n", "1", "-W", "4"]))).unwrap();
    assert_eq!(one.m(), 1);
    assert_eq!(one.arc(0).src, one.arc(0).dst);
}

#[test]
fn solve_and_verify_example() {
    let path = fixture();
    let text = stdout(&mpg(&["solve", "--algo", "jump", path.to_str().unwrap()]));
    let json: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["values"], serde_json::json!(vec!["-1/1"; 7]));
    assert_eq!(json["w0"], serde_json::json!([]));
    assert_eq!(
        json["strategy"],
        serde_json::json!([[1, 2], [3, 0], [4, 0], [6, 5]])
    );
    assert!(json.get("trace").is_none());

    let result = temp_file("example_result.json", &text);
    let out = mpg(&["verify", path.to_str().unwrap(), result.to_str().unwrap()]);
    assert!(out.status.success());

    let traced = stdout(&mpg(&[
        "solve",
        "--trace",
        "--debug-invariants",
        path.to_str().unwrap(),
    ]));
    let json: Value = serde_json::from_str(&traced).unwrap();
    assert!(!json["trace"].as_array().unwrap().is_empty());
}

#[test]
fn verify_rejects_wrong_results() {
    let arena = load_arena(&std::fs::read_to_string(fixture()).unwrap()).unwrap();
    let r = mpg_jump::solve_mpg(&arena).unwrap();
    let good = mpg_cli::solve_report(&arena, "jump", &r);
    assert!(verify_report(&arena, &good).is_empty());

    let mut value = good.clone();
    value.values[2] = "-1/2".to_string();
    assert!(!verify_report(&arena, &value).is_empty());

    let mut unreduced = good.clone();
    unreduced.values[0] = "-2/2".to_string();
    assert!(!verify_report(&arena, &unreduced).is_empty());

    let mut strategy = good.clone();
    strategy.strategy[2] = (4, 1);
    assert!(!verify_report(&arena, &strategy).is_empty());

    let mut missing = good.clone();
    missing.strategy.pop();
    assert!(!verify_report(&arena, &missing).is_empty());

    let bad = temp_file("bad_result.json", &serde_json::to_string(&value).unwrap());
    let out = mpg(&["verify", fixture().to_str().unwrap(), bad.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn jump_and_baseline_print_identical_values() {
    for seed in 0..100u64 {
        let n = 1 + (seed % 9);
        let game = stdout(&mpg(&[
            "gen",
            "-n",
            &n.to_string(),
            "-W",
            "6",
            "-s",
            &seed.to_string(),
        ]));
        let path = temp_file(&format!("random_{seed}.mpg"), &game);
        let values = |algo: &str| {
            let text = stdout(&mpg(&["solve", "--algo", algo, path.to_str().unwrap()]));
            let json: Value = serde_json::from_str(&text).unwrap();
            serde_json::to_string(&json["values"]).unwrap()
        };
        assert_eq!(values("jump"), values("baseline"), "seed {seed}");
    }
}

#[test]
fn enum_streams_ndjson() {
    let text = stdout(&mpg(&["enum", fixture().to_str().unwrap()]));
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["parent"], Value::Null);
    assert_eq!(lines[2]["parent"], 1);
    assert_eq!(lines[1]["subgame"][2], serde_json::json!([4, [2, 5]]));
    assert_eq!(lines[2]["sepm"], serde_json::json!([0, 4, 8, 4, 7, 4, 0]));
}

#[test]
fn mcp_reports_top_credits() {
    let text = stdout(&mpg(&["mcp", fixture().to_str().unwrap()]));
    let json: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["credits"], serde_json::json!(vec!["top"; 7]));
    assert_eq!(json["winning"], serde_json::json!([]));

    let game = load_arena("mpg 2 3\nv 0 0\nv 1 1\ne 0 1 -2\ne 1 0 3\ne 0 0 -1\n").unwrap();
    let report = credits_report(&game);
    assert_eq!(
        serde_json::to_value(&report.credits).unwrap(),
        serde_json::json!([2, 0])
    );
    assert_eq!(report.winning, vec![0, 1]);
}

#[test]
fn bench_writes_csv() {
    let text = stdout(&mpg(&[
        "bench",
        "-n",
        "5,7",
        "-W",
        "10",
        "-c",
        "3",
        "-a",
        "jump,baseline,bcdgr-eg-only",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], BenchRow::HEADER);
    assert_eq!(lines.len(), 7);
    assert!(lines[1].starts_with("5,10,jump,3,"));
    assert!(lines[6].starts_with("7,10,bcdgr-eg-only,3,"));

    let empty = stdout(&mpg(&["bench", "-n", "5", "-c", "0"]));
    assert_eq!(empty.trim(), BenchRow::HEADER);
}

#[test]
fn bench_order_does_not_depend_on_threads() {
    let config = |threads| BenchConfig {
        sizes: vec![6, 4],
        max_weight: 8,
        count: 6,
        seed: 3,
        algorithms: vec![Algorithm::Baseline, Algorithm::Jump],
        threads,
    };
    let key = |threads| {
        let (rows, runs) = bench(&config(threads)).unwrap();
        let rows: Vec<(usize, Algorithm, usize, f64)> = rows
            .iter()
            .map(|r| (r.n, r.algo, r.count, r.mu_lifts))
            .collect();
        let runs: Vec<(usize, u64, Algorithm, u64)> = runs
            .iter()
            .map(|r| (r.n, r.seed, r.algo, r.lifts))
            .collect();
        (rows, runs)
    };
    let one = key(1);
    assert_eq!(one, key(4));
    assert_eq!(one.0[0].0, 4);
    assert_eq!(one.1[0], (4, 3, Algorithm::Jump, one.1[0].3));
}

#[test]
fn errors_are_single_line() {
    let bad = temp_file("broken.mpg", "mpg 2 1\nv 0 0\nv 1 1\ne 0 1 3\n");
    for args in [
        vec!["solve", bad.to_str().unwrap()],
        vec!["solve", "/nonexistent/game.mpg"],
        vec!["mcp", bad.to_str().unwrap()],
    ] {
        let out = mpg(&args);
        assert!(!out.status.success());
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{err}");
    }
}

#[test]
fn solve_report_round_trips() {
    let arena = load_arena(&std::fs::read_to_string(fixture()).unwrap()).unwrap();
    let r = mpg_jump::solve_mpg(&arena).unwrap();
    let report = mpg_cli::solve_report(&arena, "jump", &r);
    let text = serde_json::to_string(&report).unwrap();
    let back: SolveReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
}

#[test]
fn verify_rejects_suboptimal_strategy() {
    let arena = load_arena("mpg 2 3\nv 0 0\nv 1 1\ne 0 0 -1\ne 0 1 2\ne 1 0 2\n").unwrap();
    let r = mpg_jump::solve_mpg(&arena).unwrap();
    let mut report = mpg_cli::solve_report(&arena, "jump", &r);
    assert_eq!(report.strategy, vec![(0, 1)]);
    assert!(verify_report(&arena, &report).is_empty());
    report.strategy = vec![(0, 0)];
    assert!(!verify_report(&arena, &report).is_empty());
}
