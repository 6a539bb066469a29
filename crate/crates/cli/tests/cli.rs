use std::process::{Command, Output};

use chernchi::eulerchi::{chi_polynomial, chi_twist_polynomial};
use chernchi::{ChiRequest, PowerSumMethod, Rank, RatPoly};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chernchi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

const CHI4_TEXT: &str = "1/24*(C1^4 + 10*C1^3 - 4*C1^2*C2 + 35*C1^2 - 30*C1*C2 + 4*C1*C3 \
+ 2*C2^2 + 50*C1 - 70*C2 + 30*C3 - 4*C4) + n";

#[test]
fn emit_chi_dim4_symbolic_rank() {
    let out = run(&["emit-chi", "--rank", "n", "--dim", "4", "--format", "text"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), CHI4_TEXT);
}

#[test]
fn emit_chi_methods_agree() {
    let a = run(&["emit-chi", "--rank", "3", "--dim", "5", "--method", "matrix"]);
    let b = run(&["emit-chi", "--rank", "3", "--dim", "5", "--method", "recursive"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).trim().ends_with(" + 3"));
}

#[test]
fn emit_chi_json_round_trips() {
    let out = run(&["emit-chi", "--rank", "n", "--dim", "5", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["vars"], serde_json::json!(["C1", "C2", "C3", "C4", "C5", "n"]));
    let parsed = RatPoly::from_json(&text).unwrap();
    let req = ChiRequest::new(5, Rank::Symbolic).unwrap();
    assert_eq!(parsed, chi_polynomial(req, PowerSumMethod::Recursive));
}

#[test]
fn emit_chi_twist_json_round_trips() {
    let out = run(&["emit-chi-twist", "--rank", "2", "--dim", "3", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["vars"], serde_json::json!(["C1", "C2", "C3", "T"]));
    let req = ChiRequest::numeric(3, 2).unwrap();
    assert_eq!(RatPoly::from_json(&text).unwrap(), chi_twist_polynomial(req));
}

#[test]
fn emit_latex_is_prefactored() {
    let out = run(&["emit-chi", "--rank", "n", "--dim", "2", "--format", "latex"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.starts_with("\\frac{1}{2}\\left["), "{s}");
    assert!(s.trim().ends_with("\\right] + n"), "{s}");
}

#[test]
fn eval_examples() {
    let out = run(&["eval", "--rank", "2", "--dim", "2", "--chern", "3,2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "9");
    // O(-1) on P^2 twisted by 1 is O, chi = 1.
    let out = run(&["eval", "--rank", "1", "--dim", "2", "--chern", "-1,0", "--twist", "1"]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = run(&["eval", "--rank", "1", "--dim", "2", "--chern", "0,0", "--twist", "-1"]);
    assert_eq!(stdout(&out).trim(), "0");
}

#[test]
fn eval_rejects_bad_chern_vectors() {
    for bad in ["3", "3,2,1", "3,x", "1.5,2"] {
        let out = run(&["eval", "--rank", "2", "--dim", "2", "--chern", bad]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
        assert!(stderr(&out).contains("--chern"), "{bad}: {}", stderr(&out));
    }
}

#[test]
fn eval_needs_numeric_rank() {
    let out = run(&["eval", "--rank", "n", "--dim", "2", "--chern", "3,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--rank"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["emit-chi", "--rank", "0", "--dim", "2"]).status.code(), Some(2));
    assert_eq!(run(&["emit-chi", "--rank", "n", "--dim", "0"]).status.code(), Some(2));
    assert_eq!(run(&["emit-chi", "--rank", "n"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["powersum", "--r", "3", "--method", "fast"]).status.code(), Some(2));
}

#[test]
fn help_exits_zero_and_lists_subcommands() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    for sub in ["emit-chi", "emit-chi-twist", "eval", "verify", "stirling", "powersum", "bench"] {
        assert!(s.contains(sub), "{sub} missing from help");
    }
    let out = run(&["verify", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    for flag in ["--dim", "--rank", "--trials", "--max-a", "--seed", "--twist-range", "--format"] {
        assert!(stdout(&out).contains(flag), "{flag} missing from verify help");
    }
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "--dim", "3", "--rank", "3", "--trials", "50", "--max-a", "4", "--seed", "7"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert!(stdout(&a).trim().ends_with("PASS: 500 checks, 0 mismatches"), "{}", stdout(&a));
    assert_eq!(stdout(&a), stdout(&run(&args)));
}

#[test]
fn verify_json_report() {
    let out = run(&[
        "verify", "--dim", "2", "--rank", "2", "--trials", "3", "--max-a", "2", "--seed", "1",
        "--twist-range", "1", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["mismatches"], 0);
    assert_eq!(doc["checks"], 12);
    assert_eq!(doc["trials"].as_array().unwrap().len(), 3);
}

#[test]
fn stirling_table() {
    let out = run(&["stirling", "--rows", "4"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("  3 |  0  2  3  1"), "{s}");
    assert!(s.contains("  4 |  0  6 11  6  1"), "{s}");
    let out = run(&["stirling", "--rows", "3", "--signed"]);
    assert!(stdout(&out).contains("  3 |  0  2 -3  1"));
}

#[test]
fn powersum_output() {
    let out = run(&["powersum", "--r", "3", "--method", "matrix"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "C1^3 - 3*C1*C2 + 3*C3");
    let out = run(&["powersum", "--r", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["vars"], serde_json::json!(["C1", "C2"]));
}

#[test]
fn bench_small_dimension() {
    let out = run(&["bench", "--dim", "4", "--reps", "1", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["agreement"], true);
    assert_eq!(doc["timings"][0]["method"], "matrix");
    assert_eq!(doc["timings"][1]["status"], "completed");
    let out = run(&["bench", "--dim", "3", "--reps", "1", "--methods", "recursive", "--matrix-cutoff", "1"]);
    let s = stdout(&out);
    assert!(s.contains("recursive: median"), "{s}");
    assert!(s.contains("agreement: n/a"), "{s}");
}
