use std::path::PathBuf;
use std::process::Command;

use ptdiag::cli::run_cli;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ptdiag").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_matrix_a() {
    let (code, out, _) = run(&["analyze", &fixture("matrix_a")]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: diagonalizable, m = (λ - 1)(λ - 2)\n"), "{out}");
    assert!(out.contains("d: (λ - 1)\n"));
    assert!(out.contains("p = d * m check: ok\n"));
}

#[test]
fn analyze_single_eigenstate() {
    let (code, out, _) = run(&["analyze", &fixture("pt2_single_eigenstate")]);
    assert_eq!(code, 3);
    assert!(out.contains("verdict: defective, witness gcd = λ\n"), "{out}");
    assert!(out.contains("pt_status: pt_invariant\n"));
}

#[test]
fn analyze_matrix_b_both_ways() {
    assert_eq!(run(&["analyze", &fixture("matrix_b")]).0, 3);
    let (code, out, _) = run(&["analyze", &fixture("matrix_b_zero")]);
    assert_eq!(code, 0);
    assert!(out.contains("d: (λ - 1)\n"));
}

#[test]
fn family_json_locus() {
    let (code, out, _) = run(&["family", "--format", "json", &fixture("family_pt4")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["locus"], "eps^4 - 3*eps^2 + 1");
    assert_eq!(v["unconfirmed_candidates"].as_array().unwrap().len(), 4);
    assert_eq!(v["real_root_intervals"].as_array().unwrap().len(), 4);
}

#[test]
fn census_flag_overrides_file_samples() {
    let (code, out, _) = run(&["family", "--samples", "2", &fixture("family_pt4")]);
    assert_eq!(code, 0);
    assert!(
        out.contains("census eps = 2: n_real: 0, complex_pairs: 2, defective: no\n"),
        "{out}"
    );
    assert!(!out.contains("census eps = 0:"));
    let (_, out, _) = run(&["family", "--samples", "-1/2,1", &fixture("family_pt4")]);
    assert!(out.contains("census eps = -1/2: n_real: 4"), "{out}");
}

#[test]
fn empty_locus_line() {
    let (code, out, _) = run(&["family", &fixture("family_constant")]);
    assert_eq!(code, 0);
    assert!(out.contains("locus: 1 (no exceptional candidates)\n"));
}

#[test]
fn isolate_width_flag() {
    let (_, out, _) = run(&[
        "family",
        "--format",
        "json",
        "--isolate-width",
        "1/8",
        &fixture("family_pt4"),
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for iv in v["real_root_intervals"].as_array().unwrap() {
        let lo: f64 = parse_q(iv["lo"].as_str().unwrap());
        let hi: f64 = parse_q(iv["hi"].as_str().unwrap());
        assert!(hi - lo <= 0.125);
    }
    assert_eq!(run(&["family", "--isolate-width", "0", &fixture("family_pt4")]).0, 1);
}

fn parse_q(s: &str) -> f64 {
    match s.split_once('/') {
        Some((n, d)) => n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap(),
        None => s.parse().unwrap(),
    }
}

#[test]
fn oracle_agrees_on_fixtures() {
    for name in [
        "matrix_a",
        "matrix_b",
        "pt2_single_eigenstate",
        "family_pt4",
        "family_pt2",
        "family_constant",
    ] {
        let (code, out, err) = run(&["oracle", &fixture(name)]);
        assert_eq!(code, 0, "{name}: {out}{err}");
        assert!(out.ends_with("oracle: agree\n"), "{name}: {out}");
    }
}

#[test]
fn parity_choices() {
    let (_, out, _) = run(&["analyze", "--parity", "none", &fixture("pt2_generic")]);
    assert!(out.contains("pt_status: not_checked\n"));
    let (_, out, _) = run(&["analyze", &fixture("pt2_generic")]);
    assert!(out.contains("pt_status: pt_invariant\n"));
    let (code, _, err) = run(&["analyze", "--parity", "file", &fixture("pt2_generic")]);
    assert_eq!(code, 1);
    assert!(err.contains("no parity"));
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(run(&["analyze", "--bogus", &fixture("matrix_a")]).0, 1);
    assert_eq!(run(&["analyze", "/nonexistent/file.json"]).0, 1);
    assert_eq!(run(&["analyze", &fixture("family_pt2")]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&[]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn bad_entry_reports_offset() {
    let dir = std::env::temp_dir().join(format!("ptdiag-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, r#"{"dim": 1, "entries": [["2+"]]}"#).unwrap();
    let (code, _, err) = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("parse error at byte 2: expected atom"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ptdiag");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["analyze", &fixture("matrix_a")]), Some(0));
    assert_eq!(status(&["analyze", &fixture("matrix_b")]), Some(3));
    assert_eq!(status(&["analyze", "--format", "yaml", &fixture("matrix_a")]), Some(1));
}

/// Golden JSON outputs. Set `PTDIAG_BLESS=1` to rewrite them.
#[test]
fn golden_json() {
    let cases: &[(&str, &str)] = &[
        ("analyze", "matrix_a"),
        ("analyze", "matrix_b"),
        ("analyze", "matrix_b_zero"),
        ("analyze", "pt2_single_eigenstate"),
        ("analyze", "pt2_generic"),
        ("analyze", "pt2_degenerate"),
        ("family", "family_pt4"),
        ("family", "family_pt2"),
        ("family", "family_constant"),
    ];
    let golden_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("PTDIAG_BLESS").is_some();
    for (cmd, name) in cases {
        let (_, out, err) = run(&[cmd, "--format", "json", &fixture(name)]);
        assert!(err.is_empty(), "{name}: {err}");
        let path = golden_dir.join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, expected, "{name} drifted from its golden file");
    }
}
