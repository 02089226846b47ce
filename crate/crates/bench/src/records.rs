//! CSV serialization of results and profiles.
//!
//! Floats are written as `{:.16e}`, i.e. 17 significant digits, which
//! round-trips every finite `f64` exactly; `inf` and `NaN` parse back too.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use marc_core::RunStatus;

use crate::error::BenchError;
use crate::grid::BenchRecord;
use crate::profile::ProfileTable;

pub const RECORD_HEADER: [&str; 10] = [
    "problem",
    "dim",
    "solver",
    "status",
    "iters",
    "nf",
    "ng",
    "cpu_seconds",
    "f_final",
    "g_norm_final",
];

pub const PROFILE_HEADER: [&str; 3] = ["solver", "tau", "rho"];

fn float(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_err(path: &Path) -> impl FnOnce(csv::Error) -> BenchError + '_ {
    move |source| BenchError::Csv {
        path: path.to_path_buf(),
        source,
    }
}

fn writer(path: &Path) -> Result<csv::Writer<File>, BenchError> {
    csv::Writer::from_path(path).map_err(csv_err(path))
}

pub fn write_records_to<W: Write>(out: W, records: &[BenchRecord]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RECORD_HEADER)?;
    for r in records {
        w.write_record([
            r.problem.clone(),
            r.dim.to_string(),
            r.solver.clone(),
            r.status.to_string(),
            r.iters.to_string(),
            r.nf.to_string(),
            r.ng.to_string(),
            float(r.cpu_seconds),
            float(r.f_final),
            float(r.g_norm_final),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_records(path: &Path, records: &[BenchRecord]) -> Result<(), BenchError> {
    let file = File::create(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_records_to(file, records).map_err(csv_err(path))
}

pub fn read_records(path: &Path) -> Result<Vec<BenchRecord>, BenchError> {
    let mut rdr = csv::Reader::from_path(path).map_err(csv_err(path))?;
    let header = rdr.headers().map_err(csv_err(path))?.clone();
    if header.iter().ne(RECORD_HEADER) {
        return Err(BenchError::Malformed {
            path: path.to_path_buf(),
            line: 1,
            msg: format!("expected header `{}`", RECORD_HEADER.join(",")),
        });
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(csv_err(path))?;
        let line = row.position().map_or(0, |p| p.line());
        let bad = |field: &str| BenchError::Malformed {
            path: path.to_path_buf(),
            line,
            msg: format!("invalid {field} `{}`", row.get(col(field)).unwrap_or("")),
        };
        let get = |field: &str| row.get(col(field)).unwrap_or("");
        out.push(BenchRecord {
            problem: get("problem").to_string(),
            dim: get("dim").parse().map_err(|_| bad("dim"))?,
            solver: get("solver").to_string(),
            status: RunStatus::parse(get("status")).ok_or_else(|| bad("status"))?,
            iters: get("iters").parse().map_err(|_| bad("iters"))?,
            nf: get("nf").parse().map_err(|_| bad("nf"))?,
            ng: get("ng").parse().map_err(|_| bad("ng"))?,
            cpu_seconds: get("cpu_seconds").parse().map_err(|_| bad("cpu_seconds"))?,
            f_final: get("f_final").parse().map_err(|_| bad("f_final"))?,
            g_norm_final: get("g_norm_final")
                .parse()
                .map_err(|_| bad("g_norm_final"))?,
        });
    }
    Ok(out)
}

fn col(field: &str) -> usize {
    RECORD_HEADER
        .iter()
        .position(|h| *h == field)
        .expect("known column")
}

/// One row per (solver, τ) sample of each profile curve.
pub fn write_profile(path: &Path, profile: &ProfileTable) -> Result<(), BenchError> {
    let mut w = writer(path)?;
    let run = |w: &mut csv::Writer<File>| -> Result<(), csv::Error> {
        w.write_record(PROFILE_HEADER)?;
        for curve in &profile.curves {
            for &(tau, rho) in &curve.points {
                w.write_record([curve.solver.clone(), float(tau), float(rho)])?;
            }
        }
        w.flush()?;
        Ok(())
    };
    run(&mut w).map_err(csv_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(f: f64) -> BenchRecord {
        BenchRecord {
            problem: "NONDIA".into(),
            dim: 5000,
            solver: "MARC3".into(),
            status: RunStatus::Converged,
            iters: 44,
            nf: 45,
            ng: 22,
            cpu_seconds: 0.012_345_678_901_234_5,
            f_final: f,
            g_norm_final: 1.0 / 3.0,
        }
    }

    #[test]
    fn empty_list_is_header_only() {
        let mut buf = Vec::new();
        write_records_to(&mut buf, &[]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            RECORD_HEADER.join(",") + "\n"
        );
    }

    #[test]
    fn one_record_is_two_lines() {
        let mut buf = Vec::new();
        write_records_to(&mut buf, &[rec(0.1)]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 2);
        assert!(text.contains("1.0000000000000001e-1"));
    }

    #[test]
    fn floats_survive_the_text_form() {
        for v in [
            0.1,
            1.0 / 3.0,
            f64::MIN_POSITIVE,
            5e-324,
            1.7976931348623157e308,
            -0.0,
        ] {
            let back: f64 = float(v).parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits());
        }
        assert_eq!(float(f64::INFINITY).parse::<f64>().unwrap(), f64::INFINITY);
        assert!(float(f64::NAN).parse::<f64>().unwrap().is_nan());
    }
}
