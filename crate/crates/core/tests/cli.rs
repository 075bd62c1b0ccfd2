use std::path::PathBuf;
use std::process::Command;

use psdproof::cli::{main_with_args, EXIT_INPUT, EXIT_INVARIANT, EXIT_OK};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("psdproof").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn canon_iso() {
    let (code, out, _) = run(&["canon-iso", &data("c4.g"), &data("c4r.g")]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "0 2 1 3\n"));
    let (code, out, _) = run(&["canon-iso", &data("c4.g"), &data("p4.g")]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "BOTTOM\n"));
}

#[test]
fn aut_prints_order() {
    let (code, out, _) = run(&["aut", &data("c4.g")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("generators "));
    assert!(out.ends_with("order 8\n"));
}

#[test]
fn prove_iso_outcomes_and_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let path_str = path.to_str().unwrap();
    let (code, out, _) = run(&["prove-iso", &data("c4.g"), &data("p4.g"), "--strategy", "honest"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "BOTTOM\n"));

    let args = [
        "prove-iso",
        &data("c4.g"),
        &data("c4r.g"),
        "--protocol",
        "comb",
        "--seed",
        "5",
        "--m",
        "8",
        "--out",
        path_str,
    ];
    let (code, out, _) = run(&args);
    assert_eq!((code, out.as_str()), (EXIT_OK, "0 2 1 3\n"));
    let first = std::fs::read(&path).unwrap();
    let json: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(json["params"]["m"], 8);
    run(&args);
    assert_eq!(std::fs::read(&path).unwrap(), first, "same config, same bytes");
}

#[test]
fn psd_test_report() {
    let args = [
        "psd-test",
        &data("c4.g"),
        &data("c4r.g"),
        "--trials",
        "200",
        "--strategies",
        "honest,lex_liar",
    ];
    let (code, out, _) = run(&args);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["distinct_outputs"], serde_json::json!([[0, 2, 1, 3]]));
    assert_eq!(run(&args).1, out);
}

#[test]
fn lexpath() {
    assert_eq!(run(&["lexpath", &data("diamond.d")]).1, "0 1 3\n");
    assert_eq!(run(&["lexpath", &data("diamond_swapped.d")]).1, "0 2 3\n");
}

#[test]
fn extract_bits() {
    let (code, out, _) = run(&["extract-bits", &data("c4.g"), &data("c4r.g")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "bits 00100111\n0 2 1 3\nqueries 8\n");
    let (_, out, _) = run(&["extract-bits", &data("c4.g"), &data("p4.g")]);
    assert_eq!(out, "BOTTOM\nqueries 0\n");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g");
    std::fs::write(&bad, "3 2\n0 1\n1 x\n").unwrap();
    let (code, _, err) = run(&["canon-iso", bad.to_str().unwrap(), &data("c4.g")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("bad.g:3:3:"), "{err}");

    let (code, _, _) = run(&["aut", "/nonexistent/graph.g"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = run(&["prove-iso", &data("c4.g"), &data("c4r.g"), "--m", "0"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = run(&["prove-iso", &data("c4.g"), &data("c4r.g"), "--strategy", "oracle"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn degree_mismatch_is_not_an_invariant_breach() {
    let dir = tempfile::tempdir().unwrap();
    let g3 = dir.path().join("g3.g");
    std::fs::write(&g3, "3 0\n").unwrap();
    let (code, out, _) = run(&["canon-iso", &data("c4.g"), g3.to_str().unwrap()]);
    assert_ne!(code, EXIT_INVARIANT);
    assert!(code == EXIT_OK && out == "BOTTOM\n" || code == EXIT_INPUT);
}

#[test]
fn selfcheck_passes() {
    let (code, out, _) = run(&["selfcheck"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_psdproof");
    let ok = Command::new(bin)
        .args(["canon-iso", &data("c4.g"), &data("c4r.g")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "0 2 1 3\n");
    let bad = Command::new(bin).args(["lexpath", &data("c4.g")]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
