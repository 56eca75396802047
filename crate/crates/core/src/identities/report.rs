//! Report and catalog serialization.

use std::io::{BufRead, Write};

use serde::Serialize;

use super::{catalog, IdentityCheckReport, Status};
use crate::error::{Error, Result};

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Config(format!("i/o: {e}"))
}

/// One JSON object per line, in the given order.
pub fn write_json_lines<W: Write>(mut out: W, reports: &[IdentityCheckReport]) -> Result<()> {
    for r in reports {
        serde_json::to_writer(&mut out, r).map_err(io_err)?;
        out.write_all(b"\n").map_err(io_err)?;
    }
    out.flush().map_err(io_err)
}

pub fn read_json_lines<R: BufRead>(input: R) -> Result<Vec<IdentityCheckReport>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(io_err)?;
        if line.trim().is_empty() {
            continue;
        }
        let r = serde_json::from_str(&line).map_err(|e| Error::Config(format!("report line {}: {e}", i + 1)))?;
        out.push(r);
    }
    Ok(out)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: &'a str,
    status: Status,
    point_index: usize,
    point: String,
    lhs_re: Option<f64>,
    lhs_im: Option<f64>,
    rhs_re: Option<f64>,
    rhs_im: Option<f64>,
    abs_err: Option<f64>,
    rel_err: Option<f64>,
    lhs_est_error: Option<f64>,
    rhs_est_error: Option<f64>,
    tol_abs: f64,
    tol_rel: f64,
    exact_lhs: Option<&'a str>,
    exact_rhs: Option<&'a str>,
    verdict: String,
    diagnostic: Option<&'a str>,
}

/// CSV with a header row. The grid point is flattened to `k=v;k=v`.
pub fn write_csv<W: Write>(out: W, reports: &[IdentityCheckReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        let point = r.point.0.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
        w.serialize(CsvRow {
            id: &r.id,
            status: r.status,
            point_index: r.point_index,
            point,
            lhs_re: r.lhs.map(|z| z.re),
            lhs_im: r.lhs.map(|z| z.im),
            rhs_re: r.rhs.map(|z| z.re),
            rhs_im: r.rhs.map(|z| z.im),
            abs_err: r.abs_err,
            rel_err: r.rel_err,
            lhs_est_error: r.lhs_est_error,
            rhs_est_error: r.rhs_est_error,
            tol_abs: r.tol_abs,
            tol_rel: r.tol_rel,
            exact_lhs: r.exact.as_ref().map(|e| e.lhs.as_str()),
            exact_rhs: r.exact.as_ref().map(|e| e.rhs.as_str()),
            verdict: r.verdict.to_string(),
            diagnostic: r.diagnostic.as_deref(),
        })
        .map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

#[derive(Serialize)]
struct CatalogEntry<'a> {
    id: &'a str,
    title: &'a str,
    reference: &'a str,
    domain: String,
    points: usize,
    status: Status,
    tol_abs: f64,
    tol_rel: f64,
    note: Option<&'a str>,
}

/// The whole catalog as a pretty-printed JSON array.
pub fn catalog_json() -> String {
    let entries: Vec<CatalogEntry<'_>> = catalog()
        .iter()
        .map(|s| CatalogEntry {
            id: s.id,
            title: s.title,
            reference: s.reference,
            domain: s.domain.to_string(),
            points: s.domain.points().len(),
            status: s.status,
            tol_abs: s.default_tol_abs,
            tol_rel: s.default_tol_rel,
            note: s.note,
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("catalog entries serialize")
}

#[cfg(test)]
mod tests {
    use super::super::{run_suite, CheckOptions};
    use super::*;

    #[test]
    fn json_lines_round_trip() {
        let run = run_suite("EULER-PROD,EXP-SUM", &[], &CheckOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_json_lines(&mut buf, &run.reports).unwrap();
        let back = read_json_lines(buf.as_slice()).unwrap();
        assert_eq!(back, run.reports);
    }

    #[test]
    fn csv_has_header_and_one_row_per_point() {
        let run = run_suite("LAMBDA-NEG", &[], &CheckOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &run.reports).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("id,status,point_index,point,"));
        assert_eq!(lines.count(), run.reports.len());
    }

    #[test]
    fn catalog_export_parses() {
        let v: serde_json::Value = serde_json::from_str(&catalog_json()).unwrap();
        assert_eq!(v.as_array().unwrap().len(), catalog().len());
    }
}
