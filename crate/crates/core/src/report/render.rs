use std::fmt::Write;

use super::VerificationReport;
use crate::error::{Error, Result};

pub(super) fn json(report: &VerificationReport) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(report).map_err(|e| Error::Internal(format!("JSON: {e}")))?;
    out.push(b'\n');
    Ok(out)
}

pub(super) fn csv(report: &VerificationReport) -> Result<Vec<u8>> {
    let err = |e: csv::Error| Error::Internal(format!("CSV: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "paper_anchor", "formula", "observed", "status"]).map_err(err)?;
    for c in &report.checks {
        w.write_record([
            c.name.as_str(),
            c.paper_anchor.as_str(),
            &c.formula_value.to_string(),
            &c.observed_value.to_string(),
            c.status.as_str(),
        ])
        .map_err(err)?;
    }
    w.into_inner().map_err(|e| Error::Internal(format!("CSV: {e}")))
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub(super) fn markdown(report: &VerificationReport) -> String {
    let c = &report.config;
    let mut out = String::new();
    let _ = writeln!(out, "# Verification report: {}\n", c.command);
    let params: Vec<String> = [("q", c.q), ("m", c.m.map(u64::from)), ("n", c.n.map(u64::from))]
        .into_iter()
        .chain([("r", c.r.map(u64::from)), ("d", c.d.map(u64::from))])
        .filter_map(|(k, v)| v.map(|v| format!("{k}={v}")))
        .collect();
    if !params.is_empty() {
        let _ = writeln!(out, "- parameters: {}", params.join(", "));
    }
    let _ = writeln!(out, "- mode: {}, seed: {}, ceiling: {}", c.mode, c.seed.0, c.ceiling.0);
    let _ = writeln!(out, "- tool version: {}", report.tool_version);
    let _ = writeln!(out, "- exit code: {}", report.exit_code);
    if let Some(ms) = report.runtime_ms {
        let _ = writeln!(out, "- runtime: {ms} ms");
    }
    let matched = report.checks.iter().filter(|r| r.status == super::Status::Match).count();
    let _ = writeln!(out, "- checks: {} ({matched} match)\n", report.checks.len());
    let _ = writeln!(out, "| name | anchor | formula | observed | status |");
    let _ = writeln!(out, "|---|---|---|---|---|");
    for r in &report.checks {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            cell(&r.name),
            cell(&r.paper_anchor),
            cell(&r.formula_value.to_string()),
            cell(&r.observed_value.to_string()),
            r.status.as_str()
        );
    }
    let details: Vec<_> = report.checks.iter().filter_map(|r| r.detail.as_ref().map(|d| (&r.name, d))).collect();
    if !details.is_empty() {
        let _ = writeln!(out, "\n## Details\n");
        for (name, d) in details {
            let _ = writeln!(out, "- {name}: {d}");
        }
    }
    if !report.notes.is_empty() {
        let _ = writeln!(out, "\n## Notes\n");
        for n in &report.notes {
            let _ = writeln!(out, "- {n}");
        }
    }
    out
}
