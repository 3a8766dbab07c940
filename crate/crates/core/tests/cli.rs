//! End-to-end tests of the `rhombic` binary: exit codes, conversions and
//! byte-stable renderings compared with golden files.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(name)
}

fn rhombic(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rhombic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn file_arg(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn zeta_of_worked_tableau_file() {
    let o = rhombic(
        &[
            "convert",
            "--via",
            "zeta",
            &file_arg("data/worked_extended.rat"),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "-5 4 9 -6 1 -7 3 8 2\n");
    let back = rhombic(&["convert", "--via", "zeta", "--to", "rat"], &stdout(&o));
    assert_eq!(back.status.code(), Some(0));
    let original = std::fs::read_to_string(data("data/worked_extended.rat")).unwrap();
    assert_eq!(stdout(&back).trim(), original.trim().replace('\n', " | "));
}

#[test]
fn insertion_and_extension_from_files() {
    let o = rhombic(
        &[
            "convert",
            "--via",
            "insertion",
            &file_arg("data/three_diagonals.rat"),
        ],
        "",
    );
    assert_eq!(stdout(&o), "[9 10 5 2 6][11 8 1 4 3 7][12 13]\n");
    let o = rhombic(
        &["convert", "--via", "extend", &file_arg("data/worked.rat")],
        "",
    );
    let ext = std::fs::read_to_string(data("data/worked_extended.rat")).unwrap();
    assert_eq!(stdout(&o).trim(), ext.trim().replace('\n', " | "));
    let o = rhombic(&["convert", "--via", "extend", "--inverse"], &stdout(&o));
    let worked = std::fs::read_to_string(data("data/worked.rat")).unwrap();
    assert_eq!(stdout(&o).trim(), worked.trim().replace('\n', " | "));
}

#[test]
fn malformed_shape_is_a_domain_error() {
    let o = rhombic(
        &[
            "convert",
            "--via",
            "insertion",
            &file_arg("data/malformed.rat"),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("shape word"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(rhombic(&["convert"], "").status.code(), Some(2));
    assert_eq!(rhombic(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        rhombic(&["render", "--format", "png"], "-2 1")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rhombic(&["render", "--format", "ascii"], "-2 1")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rhombic(&["convert", "--via", "zeta"], "[1 2]")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rhombic(&["enumerate", "tree", "3"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        rhombic(&["convert", "--via", "zeta"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        rhombic(&["convert", "--via", "zeta"], "-1 x").status.code(),
        Some(1)
    );
    assert_eq!(rhombic(&["--help"], "").status.code(), Some(0));
}

#[test]
fn verify_prints_one_line_per_instance() {
    let o = rhombic(&["verify", "--identity", "ZNR", "--max-n", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    // n from 1 to 5 with r from 0 to n.
    assert_eq!(lines.len(), 2 + 3 + 4 + 5 + 6);
    assert!(lines.iter().all(|l| l.starts_with("PASS ZNR n=")), "{out}");
    let json = rhombic(
        &["verify", "--identity", "LAH", "--max-n", "3", "--json"],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v[0]["id"], "LAH");
    assert_eq!(v[0]["instances"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_fails_under_strict_upper_crossings() {
    let o = rhombic(
        &[
            "verify",
            "--identity",
            "ZRPT",
            "--max-n",
            "3",
            "--crossing-rule",
            "strict-upper",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL ZRPT"));
    assert!(stderr(&o).contains("failed: ZRPT"));
}

#[test]
fn enumerate_counts_and_stats() {
    let o = rhombic(&["enumerate", "assemblee", "4", "2", "--count"], "");
    assert_eq!(stdout(&o), "36\n");
    let o = rhombic(&["enumerate", "mlh_star", "3", "1"], "");
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = rhombic(&["enumerate", "signed_as", "2", "1", "--stats"], "");
    for line in stdout(&o).lines() {
        let (_, json) = line.split_once('\t').unwrap();
        let v: serde_json::Value = serde_json::from_str(json).unwrap();
        assert_eq!(v["is_assemblee"], true);
    }
    let o = rhombic(&["enumerate", "rat", "20", "1"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn each_mode_converts_line_by_line() {
    let input = "-1\n-2 1\n\n-2 -1\n";
    let o = rhombic(&["convert", "--via", "sp2mlh", "--each"], input);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 3);
    let back = rhombic(
        &["convert", "--via", "sp2mlh", "--each", "--from", "mlh-star"],
        &stdout(&o),
    );
    assert_eq!(stdout(&back), "-1\n-2 1\n-2 -1\n");
}

#[test]
fn stats_of_signed_permutation() {
    let o = rhombic(&["stats", &file_arg("data/small.sp")], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["crossings"]["total"], 6);
    assert_eq!(v["stats"]["cro"], 6);
    let o = rhombic(&["stats", &file_arg("data/example_path.mlh")], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["weight"], 12);
    assert_eq!(v["marks"], 7);
}

fn assert_golden(args: &[&str], input: &str, golden: &str) {
    let o = rhombic(args, &std::fs::read_to_string(data(input)).unwrap());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let expected = std::fs::read_to_string(data(golden)).unwrap();
    assert_eq!(stdout(&o), expected, "{golden} differs");
}

#[test]
fn renderings_match_golden_files() {
    assert_golden(&["render"], "data/one_square.rat", "golden/one_square.svg");
    assert_golden(
        &["render", "--format", "svg"],
        "data/worked_extended.rat",
        "golden/worked_extended.svg",
    );
    assert_golden(
        &["render", "--format", "tikz"],
        "data/worked_extended.rat",
        "golden/worked_extended.tikz",
    );
    assert_golden(&["render"], "data/small.sp", "golden/small_arcs.svg");
    assert_golden(
        &["render", "--format", "tikz"],
        "data/small.sp",
        "golden/small_arcs.tikz",
    );
    assert_golden(
        &["render", "--format", "ascii"],
        "data/example_path.mlh",
        "golden/example_path.txt",
    );
    assert_golden(
        &["render", "--format", "svg"],
        "data/example_path.mlh",
        "golden/example_path.svg",
    );
}

#[test]
fn one_square_rendering_has_one_tile_and_one_up_glyph() {
    let svg = std::fs::read_to_string(data("golden/one_square.svg")).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 1);
    assert_eq!(svg.matches("<line class=\"up\"").count(), 1);
    let arcs = std::fs::read_to_string(data("golden/small_arcs.svg")).unwrap();
    assert!(arcs.contains("<!-- crossings: 6 (upper 3, lower 3) -->"));
}
