use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use tempfile::TempDir;

const PAIR_CSV: &str = "label,mu_lo,mu_hi,nu_lo,nu_hi\nb,0.2,0.2,0.3,0.3\na,0.1,0.3,0.2,0.4\n";

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

/// Runs the library entry point and returns (status, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["ivifn"];
    argv.extend_from_slice(args);
    let code = ivifn_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn rank_puts_wider_number_first_with_e2_tie_break() {
    let dir = TempDir::new().unwrap();
    let alts = write(dir.path(), "alts.csv", PAIR_CSV);
    let (code, out, _) = run(&["rank", "--order", "hzx", s(&alts)]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(&rows[0][col("label")], "a");
    assert_eq!(
        [
            &rows[0][col("mu_lo")],
            &rows[0][col("mu_hi")],
            &rows[0][col("nu_lo")],
            &rows[0][col("nu_hi")]
        ],
        ["1/10", "3/10", "1/5", "2/5"]
    );
    assert_eq!(&rows[0][col("tie_break")], "E2");
    assert_eq!(&rows[0][col("mu_lo_approx")], "0.1000");
    assert_eq!(&rows[1][col("tie_break")], "");
}

#[test]
fn rank_output_reranks_identically() {
    let dir = TempDir::new().unwrap();
    let alts = write(
        dir.path(),
        "alts.csv",
        "label,mu_lo,mu_hi,nu_lo,nu_hi\np,0.3,0.3,0.1,0.5\nq,0.15,0.45,0.3,0.3\nr,0.5,0.6,0.1,0.2\ns,0,0,1,1\n",
    );
    for order in ["hzx", "wlw"] {
        let (code, first, _) = run(&["rank", "--order", order, s(&alts)]);
        assert_eq!(code, 0);
        let again = write(dir.path(), "ranked.csv", &first);
        let (code, second, _) = run(&["rank", "--order", order, s(&again)]);
        assert_eq!(code, 0);
        assert_eq!(first, second, "{order}");
    }
}

#[test]
fn rank_json_lists_keys() {
    let dir = TempDir::new().unwrap();
    let alts = write(dir.path(), "alts.csv", PAIR_CSV);
    let (code, out, _) = run(&["rank", "--order", "wlw", "--json", s(&alts)]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["label"], "a");
    assert_eq!(v[0]["keys"]["G"], "2/5");
    assert_eq!(v[0]["tie_break"], "G");
    assert!(v[1]["tie_break"].is_null());
}

#[test]
fn compare_disagreement_pair() {
    let dir = TempDir::new().unwrap();
    let a = write(
        dir.path(),
        "a.json",
        r#"{"mu_lo": 0.3, "mu_hi": "3/10", "nu_lo": "0.1", "nu_hi": 0.5}"#,
    );
    let b = write(
        dir.path(),
        "b.json",
        r#"[{"label": "b", "mu_lo": 0.15, "mu_hi": 0.45, "nu_lo": 0.3, "nu_hi": 0.3}]"#,
    );
    let (code, out, _) = run(&["compare", "--order", "wlw", s(&a), s(&b)]);
    assert_eq!((code, out.trim()), (0, "Less (decided at T)"));
    let (code, out, _) = run(&["compare", "--order", "hzx", s(&a), s(&b)]);
    assert_eq!((code, out.trim()), (0, "Greater (decided at E2)"));
}

#[test]
fn compare_inline_values() {
    let (code, out, _) = run(&["compare", "<[0.2, 0.2], [0.3, 0.3]>", "0.1,0.3,0.2,0.4"]);
    assert_eq!((code, out.trim()), (0, "Less (decided at E2)"));
    let (code, out, _) = run(&["compare", "1/2,1/2,1/4,1/4", "0.5,0.5,0.25,0.25"]);
    assert_eq!((code, out.trim()), (0, "Equal (all keys tie)"));
    let (code, out, _) = run(&["compare", "--json", "0,0,1,1", "1,1,0,0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["relation"], "less");
    assert_eq!(v["key"], "S");
}

#[test]
fn join_and_meet() {
    let dir = TempDir::new().unwrap();
    let alts = write(dir.path(), "alts.csv", PAIR_CSV);
    let (code, out, _) = run(&["join", s(&alts)]);
    assert_eq!(code, 0);
    assert!(
        out.lines()
            .nth(1)
            .unwrap()
            .starts_with("a,1/10,3/10,1/5,2/5,"),
        "{out}"
    );
    let (code, out, _) = run(&["meet", s(&alts)]);
    assert_eq!(code, 0);
    assert!(
        out.lines()
            .nth(1)
            .unwrap()
            .starts_with("b,1/5,1/5,3/10,3/10,"),
        "{out}"
    );

    let empty = write(dir.path(), "empty.csv", "label,mu_lo,mu_hi,nu_lo,nu_hi\n");
    let (_, out, _) = run(&["join", s(&empty)]);
    assert!(
        out.lines().nth(1).unwrap().starts_with("bottom,0,0,1,1,"),
        "{out}"
    );
    let (_, out, _) = run(&["meet", s(&empty)]);
    assert!(
        out.lines().nth(1).unwrap().starts_with("top,1,1,0,0,"),
        "{out}"
    );
}

#[test]
fn sup_stats_open_score() {
    let dir = TempDir::new().unwrap();
    let cs = write(
        dir.path(),
        "cs.json",
        r#"{"order": "hzx", "levels": [{"value": "-1/2", "attained": false}]}"#,
    );
    let (code, out, _) = run(&["sup-stats", "--json", s(&cs)]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        [
            &v[0]["mu_lo"],
            &v[0]["mu_hi"],
            &v[0]["nu_lo"],
            &v[0]["nu_hi"]
        ],
        ["0", "0", "1/2", "1/2"]
    );

    let (code, _, err) = run(&["sup-stats", "--order", "wlw", s(&cs)]);
    assert_eq!(code, 1);
    assert!(err.contains("--order"), "{err}");

    let lower = write(
        dir.path(),
        "lower.json",
        r#"{"levels": [{"value": 0, "attained": false}]}"#,
    );
    let (code, out, _) = run(&["sup-stats", "--lower", s(&lower)]);
    assert_eq!(code, 0);
    assert!(out.contains("infimum,1/2,1/2,1/2,1/2,"), "{out}");

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"levels": [{"value": 0, "attained": true}]}"#,
    );
    let (code, _, err) = run(&["sup-stats", s(&bad)]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn cut_and_extend() {
    let dir = TempDir::new().unwrap();
    let set = write(
        dir.path(),
        "set.csv",
        "label,mu_lo,mu_hi,nu_lo,nu_hi\nx,0.1,0.3,0.2,0.4\ny,0.2,0.2,0.3,0.3\n",
    );
    let (code, out, _) = run(&["cut", s(&set), "--alpha", "0.1,0.3,0.2,0.4"]);
    assert_eq!((code, out.as_str()), (0, "x\n"));
    let (_, out, _) = run(&["cut", "--json", s(&set), "--alpha", "0,0,1,1"]);
    assert_eq!(
        serde_json::from_str::<Vec<String>>(&out).unwrap(),
        ["x", "y"]
    );

    let map = write(
        dir.path(),
        "map.json",
        r#"{"universe": ["p", "q"], "map": {"x": "p", "y": "p"}}"#,
    );
    let (code, out, _) = run(&["extend", s(&set), s(&map)]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[1].starts_with("p,1/10,3/10,1/5,2/5,"), "{out}");
    assert!(lines[2].starts_with("q,0,0,1,1,"), "{out}");

    let partial = write(dir.path(), "partial.json", r#"{"map": {"x": "p"}}"#);
    let (code, _, err) = run(&["extend", s(&set), s(&partial)]);
    assert_eq!(code, 1);
    assert!(err.contains("\"y\""), "{err}");
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let over = write(
        dir.path(),
        "over.csv",
        "label,mu_lo,mu_hi,nu_lo,nu_hi\nz,0.6,0.7,0.2,0.4\n",
    );
    let dup = write(
        dir.path(),
        "dup.csv",
        "label,mu_lo,mu_hi,nu_lo,nu_hi\nz,0,0,0,0\nz,0,0,0,0\n",
    );
    let junk = write(
        dir.path(),
        "junk.csv",
        "label,mu_lo,mu_hi,nu_lo,nu_hi\nz,0.1e0,0,0,0\n",
    );
    let no_header = write(dir.path(), "nohead.csv", "z,0,0,0,0\n");
    for (file, needle) in [
        (&over, "exceeds"),
        (&dup, "duplicate"),
        (&junk, "mu_lo"),
        (&no_header, "missing column"),
    ] {
        let (code, out, err) = run(&["rank", s(file)]);
        assert_eq!(code, 1, "{file:?}");
        assert!(out.is_empty());
        assert!(err.contains(needle), "{err}");
    }
    assert_eq!(run(&["rank", s(&dir.path().join("missing.csv"))]).0, 1);
    assert_eq!(run(&["rank", "--order", "xyz", s(&over)]).0, 1);
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn binary_verify_grid_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_ivifn"))
        .args(["verify", "--grid", "3", "--order", "hzx", "--trials", "200"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("axioms/grid3"), "{text}");
    assert!(text.trim_end().ends_with("0 failed"), "{text}");
}

#[test]
fn binary_verify_json_is_deterministic() {
    let go = || {
        Command::new(env!("CARGO_BIN_EXE_ivifn"))
            .args([
                "verify", "--grid", "2", "--seed", "7", "--trials", "50", "--json",
            ])
            .output()
            .unwrap()
    };
    let (a, b) = (go(), go());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["violation_count"] == 0));
    assert!(v.as_array().unwrap().iter().any(|r| r["order"] == "wlw"));
}

#[test]
fn binary_reports_validation_failure() {
    let dir = TempDir::new().unwrap();
    let over = write(
        dir.path(),
        "over.json",
        r#"[{"label": "z", "mu_lo": 0.6, "mu_hi": 0.7, "nu_lo": 0.2, "nu_hi": 0.4}]"#,
    );
    let out = Command::new(env!("CARGO_BIN_EXE_ivifn"))
        .args(["rank", s(&over)])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("z"));
}
