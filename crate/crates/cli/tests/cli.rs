use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bellcorr::config::Preset;
use bellcorr::csv::{parse_csv, CsvRow};
use bellcorr::run::simulate;

fn bellcorr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellcorr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.csv"))
}

#[test]
fn preset_csv_matches_golden_file() {
    for preset in Preset::ALL {
        let expected = fs::read_to_string(golden(preset.name())).unwrap();
        let out = bellcorr(&["simulate", "--preset", preset.name()]);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{preset}");
        let report = String::from_utf8(out.stderr).unwrap();
        assert!(report.contains("tau_D:"));
    }
}

#[test]
fn out_flag_writes_file_and_prints_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chloroform.csv");
    let out = bellcorr(&[
        "simulate",
        "--preset",
        "chloroform-pd",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("t1*: 0.105"), "{stdout}");
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        fs::read_to_string(golden("chloroform-pd")).unwrap()
    );
}

#[test]
fn noisy_runs_are_seeded() {
    let args = [
        "simulate",
        "--preset",
        "sodium-gad",
        "--noise-sigma",
        "0.002",
        "--seed",
        "11",
    ];
    let a = bellcorr(&args).stdout;
    assert_eq!(a, bellcorr(&args).stdout);
    assert_ne!(a, fs::read(golden("sodium-gad")).unwrap());
    let mut other = args;
    other[6] = "12";
    assert_ne!(a, bellcorr(&other).stdout);
}

#[test]
fn config_file_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    fs::write(
        &good,
        r#"{"channel":"pd","c1":0.49,"c2":0.2,"c3":0.067,"t_a":0.27,"t_b":0.15,
            "t_max":0.5,"steps":11}"#,
    )
    .unwrap();
    let out = bellcorr(&["simulate", "--config", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 12);

    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"channel":"pd","c1":2,"c2":0,"c3":0,"t_a":0.27,"t_b":0.15,"t_max":0.5,"steps":11}"#,
    )
    .unwrap();
    let out = bellcorr(&["simulate", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("c1/c2/c3"));

    let typo = dir.path().join("typo.json");
    fs::write(&typo, r#"{"chanel":"pd"}"#).unwrap();
    assert_eq!(
        bellcorr(&["critical-points", "--config", typo.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let missing = dir.path().join("missing.json");
    assert_eq!(
        bellcorr(&["simulate", "--config", missing.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );

    let unwritable = dir.path().join("no/such/dir.csv");
    let out = bellcorr(&[
        "simulate",
        "--preset",
        "sodium-gad",
        "--out",
        unwritable.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    assert_eq!(
        bellcorr(&["simulate", "--preset", "water"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bellcorr(&["simulate", "--preset", "sodium-gad", "--noise-sigma", "-1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn critical_points_subcommand() {
    let out = bellcorr(&["critical-points", "--preset", "sodium-gad"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("t1*: 0.0016"), "{text}");
    assert!(text.contains("t2*: 0.0083"), "{text}");
    assert!(text.contains("tau_E: none"));
    assert!(!text.contains("detected"));
}

#[test]
fn sweep_oracle_subcommand() {
    let out = bellcorr(&[
        "sweep-oracle",
        "--c1",
        "0.49",
        "--c2",
        "-0.2",
        "--c3",
        "0.067",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let minimum: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("sweep minimum: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((minimum - 0.2).abs() < 1e-4, "{text}");

    let out = bellcorr(&["sweep-oracle", "--c1", "1", "--c2", "1", "--c3", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_roundtrip_reproduces_trajectory() {
    for preset in Preset::ALL {
        let mut config = preset.config();
        config.noise_sigma = 0.01;
        config.seed = 3;
        let run = simulate(&config).unwrap();
        let parsed = parse_csv(&run.csv()).unwrap();
        assert_eq!(parsed.len(), run.rows.len());
        for (p, r) in parsed.iter().zip(&run.rows) {
            for (a, b) in p.fields().into_iter().zip(r.fields()) {
                assert!((a - b).abs() <= 1e-9, "{a} vs {b}");
            }
        }
        let clean = simulate(&preset.config()).unwrap();
        let parsed = parse_csv(&clean.csv()).unwrap();
        for (row, sample) in parsed.iter().zip(clean.trajectory.samples()) {
            let exact = CsvRow::from(sample);
            for (a, b) in row.fields().into_iter().zip(exact.fields()) {
                assert!((a - b).abs() <= 1e-9);
            }
        }
    }
}
