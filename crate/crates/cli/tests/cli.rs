use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use hlc_core::homalg::{Barcode, Interval};
use hlc_core::value::{int, ratio};
use hlc_core::{fixtures, Ext, PrimeField};
use serde_json::Value as Json;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn hlc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlc")).args(args).output().expect("binary runs")
}

fn hlc_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hlc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Json {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn pair(n: i64, d: i64) -> Json {
    serde_json::json!([n, d])
}

#[test]
fn barcode_of_hollow_triangle_round_trips() {
    let out = hlc(&["barcode", &data("hollow_triangle.json")]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let read: Barcode = serde_json::from_value(report["barcode"].clone()).unwrap();
    assert_eq!(read.intervals(0), &[Interval::essential(int(0))]);
    assert_eq!(read.intervals(1), &[Interval::essential(int(2))]);
    let direct = hlc_core::comparison::simplicial_barcode(&PrimeField::f2(), &fixtures::hollow_triangle(), 1).unwrap();
    assert_eq!(read, direct);
    assert_eq!(serde_json::to_value(&read).unwrap(), report["barcode"]);
}

#[test]
fn barcode_of_single_vertex_from_stdin() {
    let doc = r#"{"format": 1, "vertices": ["v"], "values": {"v": "-3/2"}, "simplices": []}"#;
    let out = hlc_stdin(&["barcode", "--field", "Q"], doc);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["field"], "Q");
    assert_eq!(report["barcode"]["dims"][0][0]["birth"], pair(-3, 2));
    assert_eq!(report["barcode"]["dims"][0][0]["death"], "inf");
}

#[test]
fn malformed_input_exits_with_two() {
    let out = hlc_stdin(&["barcode"], "{not json");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 1"), "{err}");
    let out = hlc_stdin(&["lcs"], r#"{"format": 1, "vertices": ["a", "b"], "values": {"a": 0}, "simplices": [["a", "b"]]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing value for vertex \"b\""));
    assert_eq!(hlc(&["barcode", "--field", "4", &data("slow_cone.json")]).status.code(), Some(2));
    assert_eq!(hlc(&["barcode", "/nonexistent/doc.json"]).status.code(), Some(2));
}

#[test]
fn lcs_values() {
    let filled = r#"{"format": 1, "vertices": [0, 1, 2], "values": [0, 0, 1], "simplices": [[0, 1, 2]]}"#;
    let out = hlc_stdin(&["lcs"], filled);
    assert_eq!(json(&out)["lcs"], pair(0, 1));
    let out = hlc(&["lcs", "--field", "3", &data("slow_cone.json")]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["lcs"], pair(1, 1));
    assert_eq!(report["next_smaller_failing"], pair(0, 1));
    let names: Vec<&str> = report["witnesses"].as_array().unwrap().iter().map(|w| w["vertex"].as_str().unwrap()).collect();
    assert_eq!(names, ["x", "a", "b"]);
}

#[test]
fn compare_on_hlc_fixture() {
    let out = hlc(&["compare", &data("hexagon_disc.json"), "--d", "2", "--s", "0", "--delta", "1", "--auto-tower"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["summary"]["all_pass"], true);
    assert_eq!(report["summary"]["identities_passed"], 10);
    assert_eq!(report["report"]["bottleneck"], serde_json::json!([[0, 1], [0, 1]]));
}

#[test]
fn compare_with_document_towers() {
    let out = hlc(&["compare", &data("hexagon_disc.json"), "--d", "1", "--towers", "lower", "upper"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["summary"]["identities_total"], 5);
    assert_eq!(report["report"]["delta"], pair(1, 1));
    let out = hlc(&["compare", &data("hexagon_disc.json"), "--d", "1", "--towers", "lower", "missing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_on_slow_cone() {
    let out = hlc(&["compare", &data("slow_cone.json"), "--d", "2", "--s", "0", "--delta", "5/2", "--cech-covers", "open-stars"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["report"]["lcs"], pair(1, 1));
    assert_eq!(report["report"]["hypothesis_holds"], true);
    assert_eq!(report["report"]["bound"], pair(3, 1));
    assert_eq!(report["report"]["bound_holds"], true);

    let out = hlc(&["compare", &data("slow_cone.json"), "--d", "1", "--s", "0", "--delta", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let report = json(&out);
    assert_eq!(report["report"]["hypothesis_holds"], false);
    assert_eq!(report["summary"]["identities_total"], 5);

    let out = hlc(&["compare", &data("slow_cone.json"), "--d", "2", "--s", "0", "--delta", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at level 0"));
    assert_eq!(json(&out)["report"]["tower_failure"]["level"], 0);
}

#[test]
fn lipschitz_reports() {
    let same = hlc(&["lipschitz", &data("slow_cone.json"), &data("slow_cone.json")]);
    assert_eq!(same.status.code(), Some(0));
    let r = json(&same);
    assert_eq!(r["report"]["difference"], pair(0, 1));
    assert_eq!(r["report"]["bound"], pair(0, 1));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = hlc(&[
        "lipschitz",
        &data("slow_cone.json"),
        &data("slow_cone_perturbed.json"),
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Json = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["report"]["holds"], true);
    assert_eq!(r["report"]["sup_distance"], pair(1, 2));
    let diff: Ext = serde_json::from_value(r["report"]["difference"].clone()).unwrap();
    let bound: Ext = serde_json::from_value(r["report"]["bound"].clone()).unwrap();
    assert!(diff <= bound);
    assert_eq!(bound, Ext::Finite(ratio(1, 1)));

    let out = hlc(&["lipschitz", &data("slow_cone.json"), &data("hollow_triangle.json")]);
    assert_eq!(out.status.code(), Some(2));
}
