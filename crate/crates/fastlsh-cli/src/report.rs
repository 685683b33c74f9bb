//! Report emission (JSON and CSV) and schema validation.

use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context};
use serde_json::Value;

use crate::bench::ExperimentReport;

/// One CSV row per scheme record; kept in sync with [`SchemeRecord`].
///
/// [`SchemeRecord`]: crate::bench::SchemeRecord
pub const REPORT_CSV_HEADER: &str = "scheme,k,l,width,m,recall_at_k,avg_query_time_ns,\
avg_hash_time_ns,avg_scan_time_ns,total_hash_eval_ns,candidate_count_mean,\
candidate_count_max,tuned_recall_validation,tune_target_met,seed,dataset_fingerprint";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = anyhow::Error;
    fn from_str(s: &str) -> anyhow::Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => bail!("unknown format {other:?} (expected json|csv)"),
        }
    }
}

/// Serialize a report to a writer.
pub fn write_report(
    report: &ExperimentReport,
    format: ReportFormat,
    mut out: impl Write,
) -> anyhow::Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            out.write_all(b"\n")?;
        }
        ReportFormat::Csv => {
            writeln!(out, "{REPORT_CSV_HEADER}")?;
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            for rec in &report.records {
                w.write_record([
                    rec.scheme.as_str(),
                    &rec.k.to_string(),
                    &rec.l.to_string(),
                    &format!("{}", rec.width),
                    &rec.m.to_string(),
                    &format!("{}", rec.recall_at_k),
                    &rec.avg_query_time_ns.to_string(),
                    &rec.avg_hash_time_ns.to_string(),
                    &rec.avg_scan_time_ns.to_string(),
                    &rec.total_hash_eval_ns.to_string(),
                    &format!("{}", rec.candidate_count_mean),
                    &rec.candidate_count_max.to_string(),
                    &format!("{}", rec.tuned_recall_validation),
                    &rec.tune_target_met.to_string(),
                    &rec.seed.to_string(),
                    &report.dataset_fingerprint,
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Write a report to a file path.
pub fn emit_report(
    report: &ExperimentReport,
    format: ReportFormat,
    path: impl AsRef<Path>,
) -> anyhow::Result<()> {
    let file = std::fs::File::create(path.as_ref())
        .with_context(|| format!("creating {}", path.as_ref().display()))?;
    write_report(report, format, std::io::BufWriter::new(file))
}

/// Check that a JSON value carries the report schema: the top-level fields
/// and, per record, every column the CSV promises.
pub fn validate_report_value(v: &Value) -> anyhow::Result<()> {
    let obj = v.as_object().context("report must be an object")?;
    for field in [
        "config",
        "dataset_name",
        "dataset_points",
        "dataset_dim",
        "dataset_fingerprint",
        "test_queries",
        "validation_queries",
        "topk",
        "records",
    ] {
        if !obj.contains_key(field) {
            bail!("missing report field {field:?}");
        }
    }
    let records = obj["records"].as_array().context("records must be an array")?;
    for rec in records {
        let rec = rec.as_object().context("record must be an object")?;
        for field in [
            "scheme",
            "k",
            "l",
            "width",
            "m",
            "recall_at_k",
            "avg_query_time_ns",
            "avg_hash_time_ns",
            "avg_scan_time_ns",
            "total_hash_eval_ns",
            "candidate_count_mean",
            "candidate_count_max",
            "tuned_recall_validation",
            "tune_target_met",
            "seed",
        ] {
            if !rec.contains_key(field) {
                bail!("missing record field {field:?}");
            }
        }
        let recall = rec["recall_at_k"].as_f64().context("recall_at_k must be a number")?;
        if !(0.0..=1.0).contains(&recall) {
            bail!("recall_at_k out of range: {recall}");
        }
    }
    Ok(())
}
