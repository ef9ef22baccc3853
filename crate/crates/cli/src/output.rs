//! CSV and JSON report writers.
//!
//! Numbers in CSV are serialized with 17 significant digits so reports
//! round-trip exactly; rows end with LF.

use selfsim_core::verify::ResidualReport;
use selfsim_core::{Error, Result};
use std::io::Write;

/// 17 significant digits, scientific.
pub fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn write_csv<W: Write>(
    mut w: W,
    header: &[&str],
    rows: impl Iterator<Item = Vec<f64>>,
) -> Result<()> {
    let io_err = |e: std::io::Error| {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            None
        } else {
            Some(Error::domain(format!("write failed: {e}")))
        }
    };
    if let Err(e) = writeln!(w, "{}", header.join(",")) {
        return io_err(e).map_or(Ok(()), Err);
    }
    for row in rows {
        let line: Vec<String> = row.iter().map(|&v| fmt(v)).collect();
        if let Err(e) = writeln!(w, "{}", line.join(",")) {
            return io_err(e).map_or(Ok(()), Err);
        }
    }
    Ok(())
}

/// Per-point rows of a verify report: coordinates, residual, rel_residual.
pub fn report_csv<W: Write>(w: W, report: &ResidualReport) -> Result<()> {
    let mut header: Vec<&str> = report
        .family
        .axes()
        .iter()
        .map(|a| a.label())
        .collect();
    header.push("residual");
    header.push("rel_residual");
    let rows = report.points.iter().map(|p| {
        let mut row = p.coords.clone();
        row.push(p.residual);
        row.push(p.rel_residual);
        row
    });
    write_csv(w, &header, rows)
}

/// JSON summary of a verify report, including the refinement verdict.
pub fn report_summary(report: &ResidualReport, verdict: &str) -> serde_json::Value {
    serde_json::json!({
        "family": report.family.label(),
        "branch": report.branch_index,
        "params": {
            "alpha": report.params.alpha,
            "beta": report.params.beta,
            "m": report.params.m,
            "n": report.params.n,
            "k": report.params.k,
            "nu": report.params.nu,
            "e_amp": report.params.e_amp,
        },
        "max_abs_residual": report.max_abs_residual,
        "max_rel_residual": report.max_rel_residual,
        "observed_order": report.observed_order,
        "verdict": verdict,
    })
}
