use std::path::Path;
use std::process::{Command, Output};

use wulff_towers::report::Report;
use wulff_towers::sweep::Row;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wulff-towers"))
        .args(args)
        .env_remove("WULFF_TOWERS_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn solve_square() {
    let out = run(&["solve", "--domain", "unit-square", "--norm", "euclidean", "--mass", "2.5"]);
    let report = Report::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.case.as_deref(), Some("A"));
    assert_eq!(report.j_max, 3);
    assert_eq!(report.layers.len(), 3);
    assert!((report.r_bar.unwrap() - 0.4407).abs() < 1e-4);
    assert!(report.layers.iter().all(|l| l.kind == "plaquette" && l.unique));
}

#[test]
fn solve_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["solve", "--domain", "rectangle:2:1", "--mass", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report = Report::from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(report.case.as_deref(), Some("D"));
}

#[test]
fn sweep_l1_square() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = run(&[
        "sweep", "--domain", "unit-square", "--norm", "l1", "--mass", "0.1:5:0.1", "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("m,energy,j_max,case,r_bar\n"));
    let rows: Vec<Row> = csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(rows.len(), 50);
    for w in rows.windows(2) {
        assert!(w[1].m > w[0].m);
        assert!(w[1].energy >= w[0].energy - 1e-12);
    }
    assert!((rows[49].m - 5.0).abs() < 1e-9);
}

#[test]
fn sweep_zero_mass_row() {
    let text = stdout(&run(&["sweep", "--domain", "unit-square", "--mass", "0"]));
    assert_eq!(text.lines().nth(1), Some("0.0,0.0,0,-,-"));
}

#[test]
fn verify_rectangle() {
    let out = run(&["verify", "--domain", "rectangle:2:1", "--norm", "euclidean", "--mass", "3", "--grid", "100000"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["max_discrepancy"].as_f64().unwrap() < 1e-6);
}

#[test]
fn verify_mismatch_exits_3() {
    let out = run(&["verify", "--domain", "unit-square", "--mass", "2.5", "--grid", "1000", "--max-discrepancy", "-1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn invalid_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let nonconvex = write(dir.path(), "d.json", r#"{"type":"polygon","vertices":[[0,0],[2,0],[1,0.2],[1,2]]}"#);
    let asym = write(dir.path(), "w.json", r#"{"type":"wulff-polygon","vertices":[[1,0],[0,1],[-1,0],[0,-2]]}"#);
    for args in [
        vec!["solve", "--domain", nonconvex.as_str(), "--mass", "1"],
        vec!["solve", "--domain", "unit-square", "--norm", asym.as_str(), "--mass", "1"],
        vec!["solve", "--domain", "unit-square", "--mass", "-1"],
        vec!["sweep", "--domain", "unit-square", "--mass", "0:1:0"],
        vec!["solve", "--domain", "rectangle:2", "--mass", "1"],
        vec!["solve", "--domain", "unit-square", "--mass", "0:1:0.5"],
        vec!["solve", "--domain", "unit-square", "--mass", "1", "--norm", "no-such-file.json"],
        vec!["verify", "--domain", "unit-square", "--mass", "1", "--grid", "10"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn tolerance_from_environment() {
    let bin = env!("CARGO_BIN_EXE_wulff-towers");
    let args = ["solve", "--domain", "unit-square", "--mass", "2.5"];
    let bad = Command::new(bin).args(args).env("WULFF_TOWERS_TOL", "abc").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let loose = Command::new(bin).args(args).env("WULFF_TOWERS_TOL", "1e-6").output().unwrap();
    let report = Report::from_json(&String::from_utf8(loose.stdout).unwrap()).unwrap();
    assert_eq!(report.j_max, 3);
    assert!((report.mass - 2.5).abs() < 1e-4);
}

#[test]
fn file_domain_and_norm() {
    let dir = tempfile::tempdir().unwrap();
    let domain = write(dir.path(), "d.json", r#"{"type":"rounded","core":[[0,0],[1,0],[0,1]],"radius":0.25}"#);
    let norm = write(
        dir.path(),
        "w.json",
        r#"{"type":"wulff-polygon","vertices":[[1,0],[0.5,0.9],[-0.5,0.9],[-1,0],[-0.5,-0.9],[0.5,-0.9]]}"#,
    );
    let report = Report::from_json(&stdout(&run(&["solve", "--domain", &domain, "--norm", &norm, "--mass", "2"]))).unwrap();
    assert!((report.mass - 2.0).abs() < 1e-10);
    assert!(report.j_max >= 2);
}
