mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use binlrc::bounds::{cm_bound, theorem3_bound, KOptProvider};
use binlrc::tables::sweep;
use serde_json::Value;

use common::data_path;

fn binlrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binlrc")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("binlrc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn reports(text: &str) -> Vec<Value> {
    text.lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn k_of(reports: &[Value], method: &str) -> i64 {
    reports
        .iter()
        .find(|r| r["method"] == method)
        .unwrap_or_else(|| panic!("no {method} report"))["k_upper"]
        .as_i64()
        .unwrap()
}

#[test]
fn bound_all_methods_for_table_one_column() {
    let out = binlrc(&["bound", "--n", "12", "--d", "5", "--r", "3"]);
    assert!(out.status.success());
    let reps = reports(&stdout(&out));
    assert_eq!(k_of(&reps, "disjoint"), 4);
    assert_eq!(k_of(&reps, "cm"), 5);
    assert_eq!(k_of(&reps, "theorem2"), 5);
}

#[test]
fn bound_explicit_reports_inapplicable_distance() {
    let out = binlrc(&["bound", "--n", "12", "--d", "3", "--r", "3", "--method", "explicit"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("not applicable"), "{text}");
    assert!(text.contains("d >= 5"), "{text}");
}

#[test]
fn bound_explicit_value() {
    let out = binlrc(&["bound", "--n", "63", "--d", "6", "--r", "2", "--method", "explicit"]);
    assert_eq!(k_of(&reports(&stdout(&out)), "theorem3"), 36);
}

#[test]
fn bound_disjoint_needs_divisibility() {
    let out = binlrc(&["bound", "--n", "13", "--d", "5", "--r", "3", "--method", "disjoint"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("disjoint: not applicable"));
}

#[test]
fn bound_rejects_bad_flags() {
    for args in [
        ["bound", "--n", "3", "--d", "5", "--r", "3"],
        ["bound", "--n", "12", "--d", "0", "--r", "3"],
        ["bound", "--n", "12", "--d", "5", "--r", "0"],
    ] {
        assert_eq!(binlrc(&args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(binlrc(&["bound", "--n", "x"]).status.code(), Some(2));
}

#[test]
fn bound_rejects_bad_kopt_file() {
    let path = scratch("bad_kopt.csv");
    std::fs::write(&path, "n,d,k_upper\n8,5,9\n").unwrap();
    let out = binlrc(&[
        "bound",
        "--n",
        "8",
        "--d",
        "5",
        "--r",
        "2",
        "--kopt",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line"), "{}", stderr(&out));
}

#[test]
fn construct_example_matches_fixture() {
    let out = binlrc(&["construct", "--s", "4", "--t", "1"]);
    assert!(out.status.success());
    let fixture = std::fs::read_to_string(data_path("example_h.txt")).unwrap();
    assert_eq!(stdout(&out), fixture);
}

#[test]
fn construct_certifies_optimality() {
    let path = scratch("h61.txt");
    let out = binlrc(&[
        "construct",
        "--s",
        "6",
        "--t",
        "1",
        "--certify",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("optimal, k=36=bound"), "{}", stdout(&out));
    let matrix = std::fs::read_to_string(&path).unwrap();
    assert_eq!(matrix.lines().next(), Some("27 63"));
}

#[test]
fn construct_rejects_invalid_parameters() {
    let out = binlrc(&["construct", "--s", "5", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
}

#[test]
fn verify_example_fixture() {
    let out = binlrc(&["verify", "--pcheck", data_path("example_h.txt").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in ["n=15", "k=6", "d=6", "r=2"] {
        assert!(text.lines().any(|l| l == line), "{line} missing from {text}");
    }
}

#[test]
fn verify_identity_has_no_codewords() {
    let path = scratch("identity.txt");
    std::fs::write(&path, "3 3\n100\n010\n001\n").unwrap();
    let out = binlrc(&["verify", "--pcheck", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("k=0"));
    assert!(text.contains("no nonzero codewords"));
}

#[test]
fn verify_reports_line_of_truncated_file() {
    let path = scratch("truncated.txt");
    std::fs::write(&path, "3 4\n1001\n01").unwrap();
    let out = binlrc(&["verify", "--pcheck", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn verify_writes_enumerator() {
    let path = scratch("enum.csv");
    let out = binlrc(&[
        "verify",
        "--pcheck",
        data_path("example_h.txt").to_str().unwrap(),
        "--enumerator",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let total: u64 = rdr.records().map(|r| r.unwrap()[1].parse::<u64>().unwrap()).sum();
    assert_eq!(total, 64);
}

#[test]
fn table1_rows() {
    let out = binlrc(&["table", "--name", "table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["r", "n", "disjoint", "cm"]);
    let disjoint: Vec<i64> = rdr.records().map(|r| r.unwrap()[2].parse().unwrap()).collect();
    assert_eq!(disjoint, vec![4, 7, 9, 12, 14, 17, 19, 22]);
}

#[test]
fn table1_with_fixture_matches_reference_cm_row() {
    let out = binlrc(&[
        "table",
        "--name",
        "table1",
        "--kopt",
        data_path("kopt_delsarte.csv").to_str().unwrap(),
    ]);
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let cm: Vec<i64> = rdr.records().map(|r| r.unwrap()[3].parse().unwrap()).collect();
    assert_eq!(cm, vec![5, 7, 10, 13, 15, 18, 21, 23]);
}

#[test]
fn table2_requires_kopt() {
    let out = binlrc(&["table", "--name", "table2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
}

#[test]
fn table2_first_column() {
    let out = binlrc(&[
        "table",
        "--name",
        "table2",
        "--kopt",
        data_path("kopt_refined.csv").to_str().unwrap(),
    ]);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "5,2,19"), "{text}");
    assert!(text.lines().any(|l| l == "6,2,23"), "{text}");
}

#[test]
fn sweep_cells_equal_library_values() {
    for (r, d, lo, hi) in [(3usize, 5usize, 10usize, 60usize), (2, 8, 60, 110)] {
        let path = scratch(&format!("sweep_{r}_{d}.csv"));
        let out = binlrc(&[
            "sweep",
            "--r",
            &r.to_string(),
            "--d",
            &d.to_string(),
            "--n-min",
            &lo.to_string(),
            "--n-max",
            &hi.to_string(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let mut rdr = csv::Reader::from_path(&path).unwrap();
        assert_eq!(rdr.headers().unwrap(), vec!["n", "cm_bound", "theorem3_bound"]);
        let provider = KOptProvider::fallback();
        let mut rows = 0;
        for rec in rdr.records() {
            let rec = rec.unwrap();
            let n: usize = rec[0].parse().unwrap();
            let cell = |s: &str| {
                if s.is_empty() {
                    None
                } else {
                    Some(s.parse::<i64>().unwrap())
                }
            };
            assert_eq!(cell(&rec[1]), cm_bound(n, d, r, &provider).ok().map(|b| b.k_upper));
            assert_eq!(cell(&rec[2]), theorem3_bound(n, d, r).ok().map(|b| b.k_upper));
            rows += 1;
        }
        assert_eq!(rows, hi - lo + 1);
        assert_eq!(sweep(r, d, lo, hi, &provider).len(), rows);
    }
}

#[test]
fn sweep_to_stdout_marks_inapplicable_cells() {
    let out = binlrc(&[
        "sweep", "--r", "3", "--d", "5", "--n-min", "9", "--n-max", "10", "--out", "-",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,cm_bound,theorem3_bound");
    assert!(lines[1].starts_with("9,") && lines[1].ends_with(','), "{text}");
}

#[test]
fn sweep_rejects_empty_range() {
    let out = binlrc(&[
        "sweep", "--r", "3", "--d", "5", "--n-min", "60", "--n-max", "10", "--out", "-",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let kopt = data_path("kopt_delsarte.csv");
    let args = ["table", "--name", "table2", "--kopt", kopt.to_str().unwrap()];
    let a = binlrc(&args);
    let b = binlrc(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["bound", "--n", "85", "--d", "6", "--r", "4"];
    assert_eq!(binlrc(&args).stdout, binlrc(&args).stdout);
}
