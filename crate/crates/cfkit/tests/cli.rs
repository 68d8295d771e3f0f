//! End-to-end tests of the cfkit binary: output fixtures, the exit-code
//! contract (0 ok, 1 unverified, 2 usage/parse, 3 numeric), and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cfkit"));
    cmd.env_remove("CFKIT_DIGITS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 stdout")
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cfkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eval_preset_fixture() {
    let out = stdout_of(&[
        "eval",
        "--preset",
        "conjecture-pi4",
        "--depth",
        "4",
        "--digits",
        "8",
    ]);
    assert_eq!(out, "-40/51 ≈ -0.78431372\n");
}

#[test]
fn eval_euler_fixture() {
    let out = stdout_of(&[
        "eval",
        "--preset",
        "euler-pi4",
        "--depth",
        "2",
        "--digits",
        "4",
    ]);
    assert_eq!(out, "2/3 ≈ 0.6666\n");
}

#[test]
fn eval_exact_only_without_digits() {
    let out = stdout_of(&["eval", "--preset", "conjecture-pi4", "--depth", "5"]);
    assert_eq!(out, "-436/555\n");
}

#[test]
fn eval_expr_source() {
    let out = stdout_of(&[
        "eval", "--a-expr", "(n-1)^2", "--b-expr", "-(2*n-1)", "--depth", "5",
    ]);
    // a_1 = (1-1)^2 = 0 without a head override, so f_n = 0 for all n
    assert_eq!(out, "0\n");
}

#[test]
fn eval_show_all_marks_undefined() {
    let out = stdout_of(&[
        "eval",
        "--a-expr",
        "1",
        "--b-expr",
        "0",
        "--depth",
        "2",
        "--show-all",
    ]);
    assert!(out.contains("f_1 undefined (B_1 = 0)"));
    assert!(out.contains("f_2 = 0"));
}

#[test]
fn usage_errors_exit_2() {
    // missing --b-expr
    assert_eq!(
        exit_code(&["eval", "--a-expr", "(n-1)^2", "--depth", "3"]),
        2
    );
    // no source at all
    assert_eq!(exit_code(&["eval", "--depth", "3"]), 2);
    // unknown preset
    assert_eq!(exit_code(&["eval", "--preset", "nope", "--depth", "3"]), 2);
    // expression syntax error (implicit multiplication)
    assert_eq!(
        exit_code(&["eval", "--a-expr", "2n", "--b-expr", "1", "--depth", "3"]),
        2
    );
    // pi in a sequence expression
    assert_eq!(
        exit_code(&["eval", "--a-expr", "pi", "--b-expr", "1", "--depth", "3"]),
        2
    );
    // depth 0 rejected by argument validation
    assert_eq!(
        exit_code(&["eval", "--preset", "euler-pi4", "--depth", "0"]),
        2
    );
}

#[test]
fn per_command_exit_code_contract() {
    // diagnose: numeric error when a partial denominator vanishes in probe
    assert_eq!(
        exit_code(&[
            "diagnose",
            "--a-expr",
            "1",
            "--b-expr",
            "n-3",
            "--probe-depth",
            "10"
        ]),
        3
    );
    // verify: parse error in the target expression
    assert_eq!(
        exit_code(&[
            "verify",
            "--preset",
            "euler-pi4",
            "--target",
            "pi*pi",
            "--digits",
            "4"
        ]),
        2
    );
    // compare: usage error on a zero depth
    assert_eq!(
        exit_code(&["compare", "--depths", "0", "--digits", "20"]),
        2
    );
}

#[test]
fn numeric_errors_exit_3() {
    // undefined convergent: b ≡ 0 makes B_1 = 0
    assert_eq!(
        exit_code(&["eval", "--a-expr", "1", "--b-expr", "0", "--depth", "1"]),
        3
    );
    // tail pole: a_n = 1/(n-3) blows up at n = 3
    assert_eq!(
        exit_code(&["eval", "--a-expr", "1/(n-3)", "--b-expr", "1", "--depth", "5"]),
        3
    );
    // bracket too wide for the requested comparison
    assert_eq!(exit_code(&["compare", "--depths", "5", "--digits", "2"]), 3);
}

#[test]
fn gauss_emits_preset_equivalent_file() {
    let path = temp_path("gauss.cf");
    let out = stdout_of(&[
        "gauss",
        "--a",
        "1/2",
        "--b",
        "0",
        "--c",
        "1/2",
        "--z",
        "-1",
        "--negate",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert!(out.starts_with("wrote "));
    let emitted = cfkit::cf::file::read_file(&path).unwrap();
    let expect = cfkit::cf::preset("gauss-pi4").unwrap();
    assert!(emitted.same_fraction(&expect));
}

#[test]
fn gauss_depth_evaluation() {
    let out = stdout_of(&[
        "gauss", "--a", "1/2", "--b", "0", "--c", "1/2", "--z", "-1", "--negate", "--depth", "2",
    ]);
    assert!(out.ends_with("f_2 = -3/4\n"), "got: {out}");
    let out = stdout_of(&[
        "gauss", "--a", "1/2", "--b", "1", "--c", "3/2", "--z", "-1", "--depth", "1",
    ]);
    assert!(out.ends_with("f_1 = 1\n"), "got: {out}");
}

#[test]
fn gauss_rejects_bad_arguments() {
    assert_eq!(
        exit_code(&["gauss", "--a", "1/2", "--b", "0", "--c", "0", "--z", "-1"]),
        2
    );
    assert_eq!(
        exit_code(&["gauss", "--a", "1/2", "--b", "0", "--c", "1/2", "--z", "0"]),
        2
    );
    assert_eq!(
        exit_code(&["gauss", "--a", "x", "--b", "0", "--c", "1/2", "--z", "-1"]),
        2
    );
}

#[test]
fn transform_scale_matches_conjecture() {
    let path = temp_path("scaled.cf");
    let out = stdout_of(&[
        "transform",
        "--preset",
        "gauss-pi4",
        "--scale-expr",
        "-(2*n-1)",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert!(out.contains("a_n -> a'_n"));
    assert!(out.contains("1  -1 -> 1  1 -> -1"));
    let emitted = cfkit::cf::file::read_file(&path).unwrap();
    let expect = cfkit::cf::preset("conjecture-pi4").unwrap();
    assert!(emitted.same_fraction(&expect));
}

#[test]
fn transform_match_b_expr_same_output() {
    let a = temp_path("scaled-a.cf");
    let b = temp_path("scaled-b.cf");
    stdout_of(&[
        "transform",
        "--preset",
        "gauss-pi4",
        "--scale-expr",
        "-(2*n-1)",
        "--emit",
        a.to_str().unwrap(),
    ]);
    stdout_of(&[
        "transform",
        "--preset",
        "gauss-pi4",
        "--match-b-expr",
        "-(2*n-1)",
        "--emit",
        b.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}

#[test]
fn transform_identity_scaling() {
    let path = temp_path("identity.cf");
    stdout_of(&[
        "transform",
        "--preset",
        "conjecture-pi4",
        "--scale-expr",
        "1",
        "--emit",
        path.to_str().unwrap(),
    ]);
    let emitted = cfkit::cf::file::read_file(&path).unwrap();
    let expect = cfkit::cf::preset("conjecture-pi4").unwrap();
    assert!(emitted.same_fraction(&expect));
}

#[test]
fn transform_requires_exactly_one_mode() {
    assert_eq!(exit_code(&["transform", "--preset", "gauss-pi4"]), 2);
    assert_eq!(
        exit_code(&[
            "transform",
            "--preset",
            "gauss-pi4",
            "--scale-expr",
            "1",
            "--match-b-expr",
            "1"
        ]),
        2
    );
}

#[test]
fn transform_zero_scaling_exits_3() {
    // r_1 = 0 is hit while materializing the transformed head
    assert_eq!(
        exit_code(&["transform", "--preset", "gauss-pi4", "--scale-expr", "n-1"]),
        3
    );
}

#[test]
fn diagnose_fixtures() {
    let out = stdout_of(&["diagnose", "--preset", "conjecture-pi4"]);
    assert_eq!(
        out,
        "limit 1/4, WorpitzkyBoundary, rho decreasing from n=2, sum|b| diverges\n"
    );
    let out = stdout_of(&["diagnose", "--preset", "euler-pi4"]);
    assert_eq!(out, "limit ∞, IndeterminateByRatioTest, sum|b| diverges\n");
    let out = stdout_of(&["diagnose", "--a-expr", "(n-1)^2", "--b-expr", "1"]);
    assert!(out.starts_with("limit ∞"));
}

#[test]
fn verify_exit_codes() {
    // wrong sign: never verifies
    assert_eq!(
        exit_code(&[
            "verify",
            "--preset",
            "conjecture-pi4",
            "--target",
            "pi/4",
            "--digits",
            "10",
            "--max-depth",
            "30",
        ]),
        1
    );
    // sub-linear decay: Leibniz error at depth 100 is only ~2.5e-3
    assert_eq!(
        exit_code(&[
            "verify",
            "--preset",
            "euler-pi4",
            "--target",
            "pi/4",
            "--digits",
            "6",
            "--max-depth",
            "100",
        ]),
        1
    );
    // and the honest one verifies
    let out = stdout_of(&[
        "verify",
        "--preset",
        "conjecture-pi4",
        "--target",
        "-pi/4",
        "--digits",
        "10",
        "--max-depth",
        "30",
    ]);
    assert!(out.starts_with("verified: true"), "got: {out}");
}

#[test]
fn verify_json_shape() {
    let out = stdout_of(&[
        "verify",
        "--preset",
        "conjecture-pi4",
        "--target",
        "-pi/4",
        "--digits",
        "8",
        "--max-depth",
        "40",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["verified"], serde_json::Value::Bool(true));
    assert_eq!(v["requested_decimals"], 8);
    assert!(v["achieved_decimals"].as_u64().unwrap() >= 8);
    assert!(v["depth_used"].as_u64().unwrap() <= 40);
}

#[test]
fn compare_csv_rows() {
    let out = stdout_of(&[
        "compare", "--depths", "5,15,25", "--digits", "40", "--format", "csv",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "n,series_error,cf_error,error_ratio,cf_decimals");
    assert!(lines[1].starts_with("5,4.13e-2,1.87e-4,"));
    assert!(lines[3].starts_with("25,"));
}

#[test]
fn compare_text_single_row() {
    let out = stdout_of(&[
        "compare", "--depths", "1", "--format", "text", "--digits", "20",
    ]);
    assert_eq!(out.lines().count(), 2);
    assert!(out.starts_with("n  series_error"));
}

#[test]
fn compare_exact_variant() {
    let out = stdout_of(&[
        "compare", "--depths", "5", "--digits", "40", "--format", "csv", "--exact",
    ]);
    let data = out.lines().nth(1).unwrap();
    let fields: Vec<&str> = data.split(',').collect();
    assert!(fields[1].contains('/'), "exact rational expected: {data}");
}

#[test]
fn compare_golden_reports() {
    let text = stdout_of(&[
        "compare", "--depths", "5,15,25", "--digits", "40", "--format", "text",
    ]);
    assert_eq!(text, include_str!("golden/compare_text.txt"));
    let csv = stdout_of(&[
        "compare", "--depths", "5,15,25", "--digits", "40", "--format", "csv",
    ]);
    assert_eq!(csv, include_str!("golden/compare_csv.txt"));
}

#[test]
fn compare_timing_column() {
    let out = stdout_of(&[
        "compare", "--depths", "3,6", "--digits", "30", "--format", "csv", "--timing",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "n,series_error,cf_error,error_ratio,cf_decimals,elapsed_ms"
    );
    assert_eq!(lines[1].split(',').count(), 6);
}

#[test]
fn deterministic_stdout() {
    for args in [
        vec![
            "compare", "--depths", "5,15,25", "--digits", "40", "--format", "csv",
        ],
        vec![
            "eval",
            "--preset",
            "conjecture-pi4",
            "--depth",
            "30",
            "--show-all",
        ],
        vec!["diagnose", "--preset", "gauss-pi4"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn file_source_round_trip() {
    let path = temp_path("roundtrip.cf");
    stdout_of(&[
        "gauss",
        "--a",
        "1/2",
        "--b",
        "0",
        "--c",
        "1/2",
        "--z",
        "-1",
        "--negate",
        "--emit",
        path.to_str().unwrap(),
    ]);
    let out = stdout_of(&["eval", "--file", path.to_str().unwrap(), "--depth", "2"]);
    assert_eq!(out, "-3/4\n");
}

#[test]
fn env_var_sets_default_digits() {
    let out = bin()
        .env("CFKIT_DIGITS", "6")
        .args(["eval", "--preset", "conjecture-pi4", "--depth", "4"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-40/51 ≈ -0.784313\n");
}

#[test]
fn stdout_spec_when_no_emit() {
    let out = stdout_of(&["gauss", "--a", "1/2", "--b", "0", "--c", "1/2", "--z", "-1"]);
    let spec = cfkit::cf::file::from_json(&out).unwrap();
    assert_eq!(spec.a.eval(1).unwrap(), cfkit::numerics::Rational::one());
}
