use std::path::Path;
use std::process::{Command, Output};

use marc_bench::read_records;

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_marc-bench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn run_prints_a_summary() {
    let o = bench(&[
        "run",
        "--solver",
        "marc3",
        "--problem",
        "nondia",
        "--dim",
        "5000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(line.contains("Converged"), "{line}");
    assert!(line.contains("iters=44 nf=45 ng=22"), "{line}");
}

#[test]
fn run_writes_a_json_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.json");
    let o = bench(&[
        "run",
        "--solver",
        "TRMSM2",
        "--problem",
        "DQDRTIC",
        "--dim",
        "30",
        "--stop",
        "abs",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = std::fs::read_to_string(&trace).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    for key in ["k", "f", "g_inf", "sigma", "gamma", "rho", "outcome", "C"] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn seeded_start_is_reproducible() {
    let args = [
        "run",
        "--solver",
        "MARC1",
        "--problem",
        "EDENSCH",
        "--dim",
        "60",
        "--seed",
        "5",
    ];
    let a = stdout(&bench(&args));
    assert_eq!(a, stdout(&bench(&args)));
    let plain = stdout(&bench(&args[..args.len() - 2]));
    assert_ne!(a, plain);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["check-grad", "--problem", "woods", "--dim", "10"][..],
        &["check-grad", "--problem", "nope"],
        &["run", "--solver", "MARC7", "--problem", "nondia"],
        &[
            "run",
            "--solver",
            "MARC1",
            "--problem",
            "nondia",
            "--theta",
            "4",
        ],
        &["bench", "--out", "x.csv", "--dims", "huge"],
        &["frobnicate"],
    ] {
        assert_eq!(bench(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn check_grad_exit_codes() {
    let ok = bench(&["check-grad", "--problem", "srosenbr", "--dim", "50"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("max relative error"));
    // at this size one ulp of f swamps the difference quotient
    let bad = bench(&["check-grad", "--problem", "dqrtic", "--dim", "100"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn list_shows_the_catalog() {
    let o = bench(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 15);
    assert!(text.contains("WOODS") && text.contains("multiple of 4"));
}

fn profile_rows(path: &Path) -> Vec<(String, f64, f64)> {
    let mut rdr = csv::Reader::from_path(path).unwrap();
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        ["solver", "tau", "rho"]
    );
    rdr.records()
        .map(|r| {
            let r = r.unwrap();
            (
                r[0].to_string(),
                r[1].parse().unwrap(),
                r[2].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn bench_then_profile_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let results = dir.path().join("results.csv");
    let o = bench(&[
        "bench",
        "--suite",
        "default",
        "--dims",
        "small",
        "--solvers",
        "MARC3,TRMSM3,MARC3-MONO",
        "--parallel",
        "2",
        "--out",
        results.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let records = read_records(&results).unwrap();
    assert_eq!(records.len(), 14 * 3);
    assert!(records.iter().all(|r| r.cpu_seconds >= 0.0));

    for metric in ["cpu", "iters", "nf"] {
        let data = dir.path().join(format!("{metric}.csv"));
        let svg = dir.path().join(format!("{metric}.svg"));
        let o = bench(&[
            "profile",
            "--input",
            results.to_str().unwrap(),
            "--metric",
            metric,
            "--out-data",
            data.to_str().unwrap(),
            "--out-svg",
            svg.to_str().unwrap(),
            "--log-scale",
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        let rows = profile_rows(&data);
        let mut solvers: Vec<_> = rows.iter().map(|r| r.0.clone()).collect();
        solvers.dedup();
        assert_eq!(solvers, ["MARC3", "TRMSM3", "MARC3-MONO"]);
        for s in &solvers {
            let curve: Vec<_> = rows.iter().filter(|r| &r.0 == s).collect();
            assert!(curve.windows(2).all(|w| w[0].2 <= w[1].2));
            assert!(curve.iter().all(|r| (0.0..=1.0).contains(&r.2)));
        }
        let svg = std::fs::read_to_string(&svg).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 3);
    }
}

#[test]
fn profile_rejects_missing_input() {
    let dir = tempfile::tempdir().unwrap();
    let o = bench(&[
        "profile",
        "--input",
        dir.path().join("absent.csv").to_str().unwrap(),
        "--out-data",
        dir.path().join("p.csv").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("absent.csv"));
}
