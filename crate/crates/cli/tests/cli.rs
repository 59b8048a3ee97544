use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn binmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binmat")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("binmat-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn emitted(name: &str) -> PathBuf {
    let o = binmat(&["catalog", name]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    scratch(&format!("{}.bmx", name.replace(['(', ')'], "_")), &stdout(&o))
}

#[test]
fn catalog_prints_bmx() {
    let o = binmat(&["catalog", "m4_11"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().count() > 4);
    let canon = binmat(&["catalog", "m4_11", "--emit"]);
    assert!(canon.status.success());
}

#[test]
fn unknown_catalog_name_exits_2() {
    assert_eq!(binmat(&["catalog", "no_such_matroid"]).status.code(), Some(2));
}

#[test]
fn minor_and_iso_on_emitted_files() {
    let host = emitted("m5_12a");
    let k33 = emitted("mk33");
    let d4 = emitted("delta_r(4)");
    let o = binmat(&["minor", host.to_str().unwrap(), d4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("minor: yes"));
    let o = binmat(&["minor", d4.to_str().unwrap(), k33.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "minor: no");

    let canon = scratch("d4_canon.bmx", &stdout(&binmat(&["catalog", "delta_r(4)", "--emit"])));
    let o = binmat(&["iso", d4.to_str().unwrap(), canon.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("isomorphic: yes"));
    assert_eq!(stdout(&o).lines().count(), 11);
    let o = binmat(&["iso", d4.to_str().unwrap(), k33.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "isomorphic: no");
}

#[test]
fn extend_emits_one_block_per_class() {
    let d4 = emitted("delta_r(4)");
    let o = binmat(&["extend", d4.to_str().unwrap(), "--filter", "3c,simple"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).split("\n\n").count(), 2);
    let o = binmat(&["extend", d4.to_str().unwrap(), "--filter", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_single_id_passes() {
    let o = binmat(&["check", "--id", "V05"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS V05"));
}

#[test]
fn check_json_lines() {
    let o = binmat(&["check", "--id", "V02,V05", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["id"], "V02");
    assert_eq!(lines[1]["pass"], true);
}

#[test]
fn unknown_check_id_exits_2() {
    assert_eq!(binmat(&["check", "--id", "V99"]).status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    let bad = scratch("bad.bmx", "this is not a matroid\n");
    assert_eq!(binmat(&["classify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(binmat(&["classify", "/nonexistent/file.bmx"]).status.code(), Some(2));
    assert_eq!(binmat(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn classify_reports_verdict() {
    let f = emitted("m5_11");
    let o = binmat(&["classify", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("verdict: "));
}

#[test]
fn deltay_then_wyedelta_round_trips() {
    let f7 = emitted("fano");
    let o = binmat(&["deltay", f7.to_str().unwrap(), "--triangle", "1,2,4"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let y = scratch("f7_y.bmx", &stdout(&o));
    let dual = emitted("fano_dual");
    assert!(stdout(&binmat(&["iso", y.to_str().unwrap(), dual.to_str().unwrap()])).starts_with("isomorphic: yes"));
    let o = binmat(&["wyedelta", y.to_str().unwrap(), "--triangle", "1,2,4"]);
    assert!(o.status.success());
    let back = scratch("f7_back.bmx", &stdout(&o));
    assert!(stdout(&binmat(&["iso", back.to_str().unwrap(), f7.to_str().unwrap()])).starts_with("isomorphic: yes"));
    let o = binmat(&["deltay", f7.to_str().unwrap(), "--triangle", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
}
