//! Command-line acceptance checks: exact census output through the binary
//! and byte-identical results across worker counts.

use std::process::{Command, Output};
use std::time::Instant;

fn run(args: &[&str], workers: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_omkit"));
    cmd.args(args);
    if let Some(w) = workers {
        cmd.env("OMKIT_WORKERS", w);
    }
    cmd.output().expect("binary runs")
}

/// Criterion 1, command-line surface: `census --n 5` reproduces the table
/// exactly, single-threaded, within the stated budget.
#[test]
fn census_n5_through_the_binary() {
    let start = Instant::now();
    let out = run(&["census", "--n", "5"], Some("1"));
    let elapsed = start.elapsed();
    assert!(out.status.success(), "census exited nonzero");
    let text = String::from_utf8(out.stdout).unwrap();
    let squashed: Vec<String> = text
        .lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect();
    assert!(squashed.contains(&"r=1 1 1 1 1 1".to_string()), "{text}");
    assert!(squashed.contains(&"r=2 1 3 8 46".to_string()), "{text}");
    assert!(squashed.contains(&"r=3 1 5 27".to_string()), "{text}");
    assert!(squashed.contains(&"all 1 2 5 14 74".to_string()), "{text}");
    assert!(text.contains("census matches the published table"));
    assert!(
        elapsed.as_secs() < 300,
        "single-threaded census too slow: {elapsed:?}"
    );
    println!("PASS criterion 1 (cli): census --n 5 exact in {elapsed:.2?}");
}

/// Criterion 9: byte-identical output for census and canon across 1, 4 and
/// 8 workers.
#[test]
fn determinism_across_worker_counts() {
    let reference_census = run(&["census", "--n", "4"], Some("1"));
    assert!(reference_census.status.success());
    let reference_canon = run(&["canon", "fig3-class7"], Some("1"));
    assert!(reference_canon.status.success());
    let reference_enum = run(&["enumerate", "--elements", "6", "--rank", "3"], Some("1"));
    assert!(reference_enum.status.success());
    for workers in ["4", "8"] {
        let census = run(&["census", "--n", "4"], Some(workers));
        assert_eq!(
            census.stdout, reference_census.stdout,
            "census differs at {workers} workers"
        );
        let canon = run(&["canon", "fig3-class7"], Some(workers));
        assert_eq!(
            canon.stdout, reference_canon.stdout,
            "canon differs at {workers} workers"
        );
        let en = run(
            &["enumerate", "--elements", "6", "--rank", "3"],
            Some(workers),
        );
        assert_eq!(
            en.stdout, reference_enum.stdout,
            "enumerate differs at {workers} workers"
        );
    }
    println!("PASS criterion 9: byte-identical census, canon and enumerate at 1, 4, 8 workers");
}

#[test]
fn iso_reports_reason_and_exit_code() {
    let out = run(&["iso", "fig3-class1", "fig3-class2"], None);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("not equivalent, reason: bounded quadrilateral count differs"),
        "{text}"
    );
    let out = run(&["iso", "lines5-05", "product5-05"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("equivalent"));
}

#[test]
fn stats_reports_chamber_count() {
    let out = run(&["stats", "fig13-general-position"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("26"), "{text}");
    assert!(text.contains("rank: 3"), "{text}");
}

#[test]
fn check_om_exit_codes() {
    // an arrangement's raw affine faces are not an oriented matroid
    let out = run(&["check-om", "fig3-class1"], None);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("SV0: FAIL"));
    assert!(text.contains("SV1: FAIL"));
    // the coned central arrangement passes
    let out = run(&["check-om", "fig9-suspension-rays16"], None);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn construct_round_trips_and_catalog_verifies() {
    let out = run(&["construct", "general-position", "5", "3"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("d=3"));
    // write to a temp file and feed it back through stats
    let dir = std::env::temp_dir().join("omkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gp53.arr");
    std::fs::write(&path, &text).unwrap();
    let out = run(&["faces", path.to_str().unwrap()], None);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("# 131 faces"));

    let out = run(&["construct", "pappus"], None);
    assert!(out.status.success());

    let out = run(&["export-svg", "fig3-class6"], None);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("<svg"));

    let out = run(&["export-scene", "fig13-general-position"], None);
    assert!(out.status.success());

    let out = run(&["catalog", "verify"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("0 failed"));
}

#[test]
fn parse_errors_exit_two() {
    let dir = std::env::temp_dir().join("omkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.arr");
    std::fs::write(&path, "d=2\n1 oops | 3\n").unwrap();
    let out = run(&["faces", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}
