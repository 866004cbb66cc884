use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dentcurve::{decode_mask, MaskFormat};
use serde_json::Value;
use tempfile::TempDir;

fn dentcurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dentcurve")).args(args).output().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn synth(dir: &TempDir, name: &str, extra: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut args = vec!["synth", "--output", path_str(&path)];
    args.extend_from_slice(extra);
    let out = dentcurve(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn circle_mask_has_no_indentations() {
    let dir = TempDir::new().unwrap();
    let pgm = synth(&dir, "circle.pgm", &["--shape", "circle"]);
    let report = json(&dentcurve(&["analyze", path_str(&pgm), "--sigma", "0.02", "--lowpass", "16"]));
    assert_eq!(report["schema"], 1);
    assert_eq!(report["blobs"].as_array().unwrap().len(), 1);
    assert_eq!(report["blobs"][0]["count"], 0);
}

#[test]
fn rose_points_give_five_indentations() {
    let dir = TempDir::new().unwrap();
    let csv = synth(&dir, "rose.csv", &["--shape", "rose"]);
    let report = json(&dentcurve(&["analyze", path_str(&csv), "--sigma", "0.01"]));
    let blob = &report["blobs"][0];
    assert_eq!(blob["count"], 5);
    assert_eq!(blob["n"], 1024);
    let regions = blob["indentations"].as_array().unwrap();
    assert_eq!(regions.len(), 5);
    for r in regions {
        assert!(r["mean_kappa"].as_f64().unwrap() < 0.0);
        assert!(r["peak_abs_kappa"].as_f64().unwrap() > 0.01);
    }
    let flagged = blob["boundary"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| !p["indentation"].is_null())
        .count();
    assert!(flagged > 0);

    // same threshold given as a radius
    let by_rho = json(&dentcurve(&["analyze", path_str(&csv), "--rho-sigma", "100"]));
    assert_eq!(by_rho["blobs"][0]["count"], 5);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let pgm = synth(&dir, "rose.pgm", &["--shape", "rose", "--samples", "4096"]);
    let args = ["analyze", path_str(&pgm), "--sigma", "0.01", "--lowpass", "32", "--emit-curvature"];
    let a = dentcurve(&args);
    let b = dentcurve(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(report["blobs"][0]["count"], 5);
    assert_eq!(
        report["blobs"][0]["kappa"].as_array().unwrap().len(),
        report["blobs"][0]["n"].as_u64().unwrap() as usize
    );
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = TempDir::new().unwrap();
    let csv = synth(&dir, "rose.csv", &["--shape", "rose"]);
    let both = dentcurve(&["analyze", path_str(&csv), "--sigma", "0.01", "--rho-sigma", "100"]);
    assert_eq!(both.status.code(), Some(1));
    let neither = dentcurve(&["analyze", path_str(&csv)]);
    assert_eq!(neither.status.code(), Some(1));
    let negative = dentcurve(&["analyze", path_str(&csv), "--sigma", "-1"]);
    assert_eq!(negative.status.code(), Some(1));

    let bad_rose = dentcurve(&[
        "synth",
        "--shape",
        "rose",
        "--radius",
        "20",
        "--amplitude",
        "20",
        "--output",
        path_str(&dir.path().join("bad.csv")),
    ]);
    assert_eq!(bad_rose.status.code(), Some(1));
    assert!(!dir.path().join("bad.csv").exists());
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let missing = dentcurve(&["analyze", path_str(&dir.path().join("nope.pgm")), "--sigma", "0.01"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!missing.stderr.is_empty());

    let garbage = dir.path().join("bad.pgm");
    std::fs::write(&garbage, b"P5\n4 4\n255\n\x00").unwrap();
    assert_eq!(dentcurve(&["analyze", path_str(&garbage), "--sigma", "0.01"]).status.code(), Some(2));

    let bad_points = dir.path().join("bad.csv");
    std::fs::write(&bad_points, "x,y\n1,2\nthree,4\n").unwrap();
    let out = dentcurve(&["analyze", path_str(&bad_points), "--sigma", "0.01"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('3'));
}

#[test]
fn degenerate_inputs_exit_with_three() {
    let dir = TempDir::new().unwrap();
    let short = dir.path().join("short.csv");
    std::fs::write(&short, "x,y\n0,0\n1,0\n1,1\n0,1\n").unwrap();
    assert_eq!(dentcurve(&["analyze", path_str(&short), "--sigma", "0.01"]).status.code(), Some(3));

    let blank = dir.path().join("blank.pbm");
    std::fs::write(&blank, "P1\n3 3\n0 0 0\n0 0 0\n0 0 0\n").unwrap();
    assert_eq!(dentcurve(&["analyze", path_str(&blank), "--sigma", "0.01"]).status.code(), Some(3));
}

#[test]
fn synth_outputs_are_readable() {
    let dir = TempDir::new().unwrap();
    let pgm = synth(&dir, "circle.pgm", &["--shape", "circle", "--width", "256", "--height", "220"]);
    let mask = decode_mask(&std::fs::read(&pgm).unwrap(), MaskFormat::Netpbm).unwrap();
    assert_eq!((mask.width(), mask.height()), (256, 220));
    let area = mask.foreground_count() as f64;
    let expected = std::f64::consts::PI * 100.0 * 100.0;
    assert!((area - expected).abs() < 0.02 * expected, "{area}");

    let pbm = synth(&dir, "pac.pbm", &["--shape", "pacman"]);
    assert!(std::fs::read(&pbm).unwrap().starts_with(b"P4"));

    let csv = synth(&dir, "rose.csv", &["--shape", "rose", "--samples", "300"]);
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,y");
    assert_eq!(lines.len(), 301);
}

#[test]
fn baseline_compare_shows_divergence() {
    let dir = TempDir::new().unwrap();
    let pac = synth(&dir, "pac.pgm", &["--shape", "pacman"]);
    let report = json(&dentcurve(&[
        "baseline",
        path_str(&pac),
        "--compare",
        "--sigma",
        "0.02",
        "--lowpass",
        "16",
    ]));
    assert_eq!(report["command"], "baseline");
    assert_eq!(report["blobs"][0]["gap_count"], 1);
    assert_eq!(report["blobs"][0]["indentations"], 1);

    let nested = synth(&dir, "nested.pgm", &["--shape", "nested", "--samples", "4096"]);
    let report = json(&dentcurve(&[
        "baseline",
        path_str(&nested),
        "--compare",
        "--sigma",
        "0.01",
        "--lowpass",
        "32",
    ]));
    assert_eq!(report["blobs"][0]["gap_count"], 1);
    assert_eq!(report["blobs"][0]["indentations"], 2);
}

#[test]
fn baseline_without_compare_needs_no_sigma() {
    let dir = TempDir::new().unwrap();
    let rose = synth(&dir, "rose.pgm", &["--shape", "rose", "--samples", "4096"]);
    let report = json(&dentcurve(&["baseline", path_str(&rose)]));
    assert_eq!(report["blobs"][0]["gap_count"], 5);
    assert!(report["blobs"][0].get("indentations").is_none());
}

#[test]
fn csv_reports_and_output_files() {
    let dir = TempDir::new().unwrap();
    let csv = synth(&dir, "rose.csv", &["--shape", "rose"]);
    let report_path = dir.path().join("report.csv");
    let out = dentcurve(&[
        "analyze",
        path_str(&csv),
        "--sigma",
        "0.01",
        "--format",
        "csv",
        "--output",
        path_str(&report_path),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&report_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("blob,component,index,x,y,kappa,sign,indentation"));
    assert_eq!(lines.count(), 1024);

    let pac = synth(&dir, "pac.pgm", &["--shape", "pacman"]);
    let out = dentcurve(&["baseline", path_str(&pac), "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "component,area,hull_gaps");
    assert!(lines[1].ends_with(",1"));
}

#[test]
fn multiple_blobs_are_reported_in_order() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("two.pbm");
    // two 4x4 squares
    let mut rows = Vec::new();
    for y in 0..8 {
        let row: Vec<&str> = (0..14)
            .map(|x| if (1..5).contains(&y) && ((1..5).contains(&x) || (8..12).contains(&x)) { "1" } else { "0" })
            .collect();
        rows.push(row.join(" "));
    }
    std::fs::write(&path, format!("P1\n14 8\n{}\n", rows.join("\n"))).unwrap();
    let report = json(&dentcurve(&["analyze", path_str(&path), "--sigma", "0.5"]));
    let blobs = report["blobs"].as_array().unwrap();
    assert_eq!(blobs.len(), 2);
    assert_eq!(blobs[0]["component"], 0);
    assert_eq!(blobs[1]["component"], 1);
    assert_eq!(blobs[0]["area"], 16);
}
