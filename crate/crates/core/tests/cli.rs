use std::process::Command;

use parab_kit::cli::run_cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("parab-kit").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn binary_verifies_prop2_as_json() {
    let out = Command::new(env!("CARGO_BIN_EXE_parab-kit"))
        .args(["verify", "prop2", "--nmax", "5", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "parab-kit/1");
    assert_eq!(v["parameters"], serde_json::json!(["-7/4", "-5/4", "-3/4", "1/4"]));
    assert_eq!(v["environment"]["nmax"], 5);
}

#[test]
fn binary_exit_code_on_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_parab-kit")).args(["pn"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn discriminant_subcommand() {
    let (code, out, _) = run(&["pn", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("P_3(b) = b^12+"));
    let (code, out, _) = run(&["--json", "pn", "--n", "2", "--check-parity"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["parity"]["value_at_minus6_mod2"], 1);
    assert_eq!(run(&["pn", "--n", "7"]).0, 2);
}

#[test]
fn kronecker_subcommand() {
    let (code, out, _) = run(&["kronecker", "--poly", "x^4+x^3+x^2+x+1"]);
    assert_eq!(code, 0);
    assert!(out.contains('5'), "{out}");
    let (_, out, _) = run(&["kronecker", "--poly", "x^2-x-1"]);
    assert!(out.contains("not a product of cyclotomics"));
}

#[test]
fn classify_and_multiplier() {
    let (code, out, _) = run(&["classify", "--c", "-3/2"]);
    assert_eq!(code, 0);
    assert!(out.contains("NotUpToBound(5)"));
    let (code, out, _) = run(&["multiplier", "--c", "-5/4", "--period", "2", "--cycle-poly", "4z^2+4z-1", "--expect", "-1"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("multiplier -1\n"), "{out}");
    let (code, _, err) = run(&["multiplier", "--c", "-5/4", "--period", "2", "--cycle-poly", "4z^2+4z-1", "--expect", "1"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn algebraic_subcommands() {
    let (_, out, _) = run(&["totally-real", "--poly", "x^2+1"]);
    assert!(out.contains("not totally real"), "{out}");
    let (_, out, _) = run(&["isolate", "--poly", "16x^2+52x+41"]);
    assert!(out.starts_with("2 real root(s)"), "{out}");
    assert_eq!(run(&["classify", "--c", "abc"]).0, 2);
}

#[test]
fn output_file_holds_json_report() {
    let path = std::env::temp_dir().join(format!("parab-kit-prop1-{}.json", std::process::id()));
    let (code, out, _) = run(&["--quiet", "verify", "prop1", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let r = parab_kit::classify::report_from_json(&text).unwrap();
    assert_eq!(r.parameters, ["-2", "-1", "0"]);
}
