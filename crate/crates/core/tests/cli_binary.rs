use std::path::Path;
use kippenhahn::mpoly::{parse_poly, Ring};
use std::process::{Command, Output};

fn kippenhahn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kippenhahn"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn same_poly(text: &str, golden_file: &str, var: &str) -> bool {
    let golden = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join(golden_file)).unwrap();
    let ring = Ring::projective(var);
    parse_poly(text, &ring).unwrap() == parse_poly(&golden, &ring).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn charpoly_of_the_rounded_triangle() {
    let o = kippenhahn(&["charpoly", "--input", "tests/data/pencil3.toml"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(same_poly(&stdout(&o), "tests/data/cubic.poly", "x"));
}

#[test]
fn dual_of_the_cubic_matches_golden() {
    let o = kippenhahn(&["dual", "--input", "tests/data/cubic.poly"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(same_poly(&stdout(&o), "tests/data/cubic_dual.poly", "y"));
}

#[test]
fn term_cap_exit_code() {
    let o = kippenhahn(&["dual", "--input", "tests/data/cubic.poly", "--max-terms", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
}

#[test]
fn missing_input_is_a_usage_error() {
    let o = kippenhahn(&["dual", "--input", "tests/data/no_such_file.poly"]);
    assert_eq!(o.status.code(), Some(2));
    let o = kippenhahn(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn singular_points_of_the_rounded_triangle_dual() {
    let o = kippenhahn(&["singular", "--preset", "rounded-triangle"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# 3 real singular point(s)"), "{out}");
}

#[test]
fn fermat_verify_fails_with_exit_1() {
    let o = kippenhahn(&["verify", "--preset", "fermat6"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let hull = out.lines().find(|l| l.contains("hull-inclusion")).expect("hull line");
    assert!(hull.starts_with("FAIL"), "{hull}");
    assert!(out.contains("UNCHECKED"));
}

#[test]
fn rounded_triangle_verify_passes() {
    let o = kippenhahn(&["verify", "--input", "examples/data/rounded_triangle.toml", "--resolution", "360"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn plot_writes_svg_and_csv() {
    let dir = std::env::temp_dir().join(format!("kippenhahn-plot-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let o = kippenhahn(&["plot", "--preset", "rounded-triangle", "--panel", "kippenhahn", "--out-dir", d, "--resolution", "90"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let svg = std::fs::read_to_string(dir.join("kippenhahn.svg")).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    let csv = std::fs::read_to_string(dir.join("kippenhahn.csv")).unwrap();
    assert_eq!(csv.lines().next(), Some("theta,y1,y2,branch"));
    assert_eq!(csv.lines().count(), 1 + 3 * 90);
    std::fs::remove_dir_all(dir).ok();
}
