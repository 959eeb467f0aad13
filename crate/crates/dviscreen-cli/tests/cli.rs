//! End-to-end checks of the command-line interface.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dviscreen"))
}

#[test]
fn gen_data_round_trips_through_train() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("toy.svm");
    let out = bin()
        .args([
            "gen-data",
            "--preset",
            "toy1",
            "--seed",
            "7",
            "--out",
            data.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stdout).contains("2000 instances"));

    let report = dir.path().join("train.json");
    let out = bin()
        .args([
            "train",
            "--data",
            data.to_str().unwrap(),
            "--loss",
            "svm",
            "--c",
            "1.0",
            "--out",
            report.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["converged"], true);
    assert_eq!(parsed["loss"], "hinge");
    assert_eq!(
        parsed["partition"]["r"].as_u64().unwrap()
            + parsed["partition"]["e"].as_u64().unwrap()
            + parsed["partition"]["l"].as_u64().unwrap(),
        2000
    );
}

#[test]
fn path_emits_csv_with_one_row_per_grid_point() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("path.csv");
    let out = bin()
        .args([
            "path",
            "--preset",
            "toy2",
            "--cmin",
            "0.1",
            "--cmax",
            "2.0",
            "--k",
            "6",
            "--method",
            "dvi-dual",
            "--format",
            "csv",
            "--out",
            report.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&report).unwrap();
    let data_rows = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("c,"))
        .count();
    assert_eq!(data_rows, 6);
    assert!(text.contains("# total_time_s="));
}

#[test]
fn verify_passes_on_preset_and_explicit_grid() {
    let out = bin()
        .args([
            "verify",
            "--preset",
            "toy1",
            "--grid",
            "0.5,1.0,2.0",
            "--method",
            "dvi-primal",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stdout).contains("safety verified: 0 violations"));
}

#[test]
fn compare_reports_dominance() {
    let out = bin()
        .args([
            "compare",
            "--preset",
            "toy3",
            "--grid",
            "0.2,0.5,1.0,3.0",
            "--methods",
            "ssnsv,essnsv",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        stdout.contains("essnsv screened set contains ssnsv's at every point: true"),
        "{stdout}"
    );
}

#[test]
fn loss_method_mismatch_is_a_clean_error() {
    let out = bin()
        .args([
            "path", "--preset", "reg", "--grid", "0.5,1.0", "--method", "ssnsv",
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("ssnsv"), "{stderr}");
    assert!(stderr.contains("absolute"), "{stderr}");
}

#[test]
fn csv_ingestion_with_header_and_label_column() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("data.csv");
    std::fs::write(
        &csv,
        "label,f1,f2\n1,0.5,1.5\n-1,-0.5,-1.0\n1,0.8,0.2\n-1,-1.2,0.4\n",
    )
    .unwrap();
    let out = bin()
        .args([
            "train",
            "--data",
            csv.to_str().unwrap(),
            "--header",
            "--label-col",
            "0",
            "--loss",
            "svm",
            "--c",
            "0.5",
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"converged\": true"), "{stdout}");
}

#[test]
fn missing_data_source_is_an_error() {
    let out = bin().args(["train", "--c", "1.0"]).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--data or --preset"));
}
