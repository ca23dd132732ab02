use std::process::{Command, Output};

use mcgrep_core::algebra::{parse_rational, AnyMatrix, Matrix, MatrixFormat};
use mcgrep_core::homology::default_model;

fn mcgrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcgrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn dims_prints_both_counts() {
    let o = mcgrep(&["dims", "--genera", "4,5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("g=4: main 15 = 12 + 3, naive 174"), "{out}");
    assert!(out.contains("naive 368"), "{out}");
}

#[test]
fn small_genus_is_an_error() {
    let o = mcgrep(&["--genus", "3", "dims"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn compare_expectations_drive_exit_code() {
    let equal = ["compare", "--left", "T1 T2 T1", "--right", "T2 T1 T2"];
    assert_eq!(mcgrep(&[&equal[..], &["--expect", "equal"]].concat()).status.code(), Some(0));
    assert_eq!(mcgrep(&[&equal[..], &["--expect", "distinct"]].concat()).status.code(), Some(1));
    let o = mcgrep(&["compare", "--left", "Y", "--right", "1", "--expect", "distinct"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_word_is_an_error() {
    assert_eq!(mcgrep(&["eval", "--word", "T9"]).status.code(), Some(2));
    assert_eq!(mcgrep(&["eval", "--word", "T1 ^"]).status.code(), Some(2));
}

#[test]
fn relators_and_braid_nf() {
    let o = mcgrep(&["relators"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in ["braid(1)", "far(1,3)", "centre", "refl-square", "y-square", "y-comm(R)"] {
        assert!(out.contains(name), "{name} missing from\n{out}");
    }
    let o = mcgrep(&["braid-nf", "--word", "s1 s2 s1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "delta^0 (1 3)");
    let o = mcgrep(&["braid-nf", "--word", "s1 s2 s1 s3 s2 s1"]);
    assert!(stdout(&o).starts_with("delta^1"), "{}", stdout(&o));
}

#[test]
fn export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("y.json");
    let o = mcgrep(&["export", "--word", "Y", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let AnyMatrix::Rational(m) = AnyMatrix::read_file(&path, MatrixFormat::Json).unwrap() else {
        panic!("expected an exact matrix");
    };
    assert_eq!(m.dim(), 15);
    assert_eq!(m.mul(&m).unwrap(), Matrix::identity(15));
}

#[test]
fn l2_check_flags_corrupted_model() {
    let dir = tempfile::tempdir().unwrap();
    let good = default_model(4).unwrap();
    let path = dir.path().join("good.json");
    good.save(&path).unwrap();
    let o = mcgrep(&["l2-check", "--model", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let doubled = good.a(1).map(|x| x * parse_rational("2").unwrap());
    let bad = good.clone().with_a(1, doubled).unwrap();
    let path = dir.path().join("bad.json");
    bad.save(&path).unwrap();
    let o = mcgrep(&["l2-check", "--model", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("braid(1)"));
}

#[test]
fn certify_is_honest_about_tau() {
    let o = mcgrep(&["certify"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let fails: Vec<_> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails.len(), 1, "{out}");
    assert!(fails[0].contains("rescale.tau-scalar"));
}

#[test]
fn interval_mode_with_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.toml");
    std::fs::write(&cfg, "unit-policy = \"fixed\"\nt0 = \"1/3\"\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let exact = mcgrep(&["--config", cfg, "eval", "--word", "T1"]);
    assert_eq!(exact.status.code(), Some(2));
    let o = mcgrep(&["--config", cfg, "--mode", "interval", "eval", "--word", "(T1 T2 T3)^4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}
