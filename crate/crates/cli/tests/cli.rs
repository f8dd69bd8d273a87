use std::process::{Command, Output};

fn fano4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano4"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn list_prints_every_family() {
    let o = fano4(&["list"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 28);
    assert!(out.lines().next().unwrap().starts_with("X^1_{0,1}"));
    assert!(out.contains("X^7_{3,6}  i=7 a=3 d=6"));
}

#[test]
fn verify_passes_with_exit_zero() {
    let o = fano4(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("28/28 families pass, 0 mismatches"));

    let quiet = fano4(&["--quiet", "verify"]);
    assert_eq!(quiet.status.code(), Some(0));
    assert!(stdout(&quiet).is_empty());
}

#[test]
fn info_shows_record_and_cones() {
    let o = fano4(&["info", "6", "2", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("K^4 = 160"));
    assert!(out.contains("h12 = 0, h13 = 5, h22 = 54"));
    assert!(out.contains("chi(T) = -43, h0(T) <= 11, h1(T) <= 54"));
    assert!(out.contains("pairing matrix"));
    assert!(out.contains("R4 = [4G + 2Ê]"));
}

#[test]
fn cones_shows_pairings() {
    let out = stdout(&fano4(&["cones", "7", "0", "1"]));
    assert!(out.contains("C_G^  -K.C_G^ = 3"));
    assert!(out.contains("R3 = [G + Ê] (1, 1, 0)  face {F^, C_G^}"));
    assert!(!out.contains("R4"));
}

#[test]
fn inadmissible_triple_exits_two() {
    let o = fano4(&["info", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an admissible triple"));
    assert_eq!(fano4(&["cones", "9", "0", "1"]).status.code(), Some(2));
}

#[test]
fn export_to_stdout_and_file() {
    let csv = stdout(&fano4(&["export", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 29);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.json");
    let o = fano4(&["export", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 28);
    assert_eq!(rows[16]["label"], "X^7_{0,1}");
    assert_eq!(rows[16]["K4"], 431);
    assert_eq!(rows[16]["toric_label"], "E3");
    assert_eq!(rows[8]["h1_T_is_exact"], false);

    let md = stdout(&fano4(&["export", "--format", "markdown"]));
    assert!(md.contains("| X^7_{3,6} | 170 | 164 | 43 | 0 | 10 | 88 | ∅ | rational |"));
}

#[test]
fn unknown_format_is_rejected() {
    assert_eq!(fano4(&["export", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn version_flag() {
    let o = fano4(&["--version"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("fano4 "));
}
