use std::path::PathBuf;
use std::process::{Command, Output};

use sca_core::{continuity_check, parse_generations};

fn sca(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sca"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sca-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn simulate_output_reparses_and_infers() {
    let init = scratch("init.txt", "@0 -l -- s-\n");
    let init = init.to_str().unwrap();
    let out = sca(&[
        "simulate",
        "--init",
        init,
        "--turn",
        "010101001",
        "--cross",
        "000000000",
        "--steps",
        "12",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let gens = parse_generations(&text).unwrap();
    assert_eq!(gens.len(), 13);
    assert!(continuity_check(&gens).is_ok());

    let pattern = scratch("pattern.txt", &text);
    let out = sca(&["infer", "--pattern", pattern.to_str().unwrap()]);
    assert!(out.status.success());
    let turning = stdout(&out)
        .lines()
        .next()
        .unwrap()
        .trim_start_matches("turning: ")
        .to_string();
    let rule = sca_core::GenericRule::parse(sca_core::RuleKind::Turning, &turning).unwrap();
    assert!(rule.admits(0b100101010));
}

#[test]
fn ascii_and_svg_renders() {
    let init = scratch("cross.txt", "@0 -s s-\n");
    let init = init.to_str().unwrap();
    let args = [
        "simulate",
        "--init",
        init,
        "--turn",
        "100000000",
        "--cross",
        "000010000",
        "--steps",
        "2",
    ];
    let ascii = sca(&[&args[..], &["--render", "ascii"]].concat());
    assert_eq!(stdout(&ascii), "  | |\n   X\n  | |\n");
    let svg = sca(&[&args[..], &["--render", "svg"]].concat());
    assert!(stdout(&svg).starts_with("<svg"));
}

#[test]
fn infer_reports_conflicts() {
    let pattern = scratch(
        "conflict.txt",
        "@0 s- r- -s RL\n@-1 -l -- r- RL s-\n@-2 -s -- -- ss ss\n@-1 r- -- -s rl r-\n",
    );
    let out = sca(&["infer", "--pattern", pattern.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn discontinuous_pattern_has_no_rule() {
    let pattern = scratch("gap.txt", "@0 -l\n@5 -l\n");
    let out = sca(&["infer", "--pattern", pattern.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("discontinuous"));
}

#[test]
fn json_analyze_reports_a_glider() {
    let init = scratch("left.txt", "@0 -l\n");
    let out = sca(&[
        "--json",
        "analyze",
        "--init",
        init.to_str().unwrap(),
        "--turn",
        "000001001",
        "--cross",
        "000000000",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["glider"], true);
    assert_eq!(v["speed"], "1/1");
}

#[test]
fn enumerate_pure_json_summary() {
    let out = sca(&["--json", "enumerate-pure", "--strands", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["count"], 32);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sca(&["classify", "--strands", "3"]).status.code(), Some(2));
    assert_eq!(
        sca(&["--jobs", "0", "classify", "--strands", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sca(&["infer", "--pattern", "/nonexistent/pattern"])
            .status
            .code(),
        Some(2)
    );
    let bad = scratch("bad.txt", "@0 -l -x\n");
    assert_eq!(
        sca(&["infer", "--pattern", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn unsettled_analysis_exits_one() {
    let init = scratch("drift.txt", "@0 -l -s\n");
    let out = sca(&[
        "analyze",
        "--init",
        init.to_str().unwrap(),
        "--turn",
        "000001001",
        "--cross",
        "000000000",
        "--budget",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
