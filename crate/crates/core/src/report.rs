//! CSV emission for evaluation results: the per-method summary table, reduction ratios,
//! lower-bound tightness and runtimes. Files are UTF-8 with LF line endings and a header row.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::audit::AuditReport;
use crate::bench::BenchRow;
use crate::error::{Error, Result};
use crate::method::{Method, Params};

#[derive(Debug, Clone, PartialEq)]
pub struct MethodResult {
    pub dataset: String,
    pub method: Method,
    /// `None` for parameter-free methods.
    pub params: Option<Params>,
    pub n: usize,
    pub ratio: f64,
    pub fpr: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvalReport {
    pub results: Vec<MethodResult>,
    pub audits: Vec<AuditReport>,
    pub runtimes: Vec<BenchRow>,
}

impl EvalReport {
    pub fn is_empty(&self) -> bool {
        self.results.is_empty() && self.audits.is_empty() && self.runtimes.is_empty()
    }
}

pub const TABLE_FILE: &str = "results.csv";
pub const RATIO_FILE: &str = "ratios.csv";
pub const TLB_FILE: &str = "tlb.csv";
pub const RUNTIME_FILE: &str = "runtime.csv";

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_results_csv<W: Write>(results: &[MethodResult], out: W) -> Result<()> {
    let mut wr = writer(out);
    wr.write_record(["dataset", "method", "w", "alpha", "alpha_t", "ratio", "fpr"])?;
    for r in results {
        let p = r.params;
        let alpha_t = p.filter(|_| r.method.uses_trend_alpha()).map(|p| p.alpha_t);
        wr.write_record([
            r.dataset.clone(),
            r.method.to_string(),
            opt(p.map(|p| p.w)),
            opt(p.map(|p| p.alpha)),
            opt(alpha_t),
            r.ratio.to_string(),
            r.fpr.to_string(),
        ])?;
    }
    wr.flush().map_err(|e| Error::io("<results>", e))?;
    Ok(())
}

pub fn write_ratio_csv<W: Write>(results: &[MethodResult], out: W) -> Result<()> {
    let mut wr = writer(out);
    wr.write_record(["dataset", "method", "w", "n", "ratio"])?;
    for r in results {
        wr.write_record([
            r.dataset.clone(),
            r.method.to_string(),
            opt(r.params.map(|p| p.w)),
            r.n.to_string(),
            r.ratio.to_string(),
        ])?;
    }
    wr.flush().map_err(|e| Error::io("<ratios>", e))?;
    Ok(())
}

pub fn write_runtime_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut wr = writer(out);
    wr.write_record([
        "dataset",
        "method",
        "w",
        "alpha",
        "transform_secs",
        "classify_secs",
        "total_secs",
    ])?;
    for r in rows {
        wr.write_record([
            r.dataset.clone(),
            r.method.to_string(),
            r.w.to_string(),
            r.alpha.to_string(),
            format!("{:.6}", r.transform_secs),
            format!("{:.6}", r.classify_secs),
            format!("{:.6}", r.total_secs()),
        ])?;
    }
    wr.flush().map_err(|e| Error::io("<runtime>", e))?;
    Ok(())
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(
        File::create(path).map_err(|e| Error::io(path, e))?,
    ))
}

/// Writes every non-empty section of `report` into `dir` and returns the written paths.
pub fn emit_report(report: &EvalReport, dir: &Path) -> Result<Vec<PathBuf>> {
    if report.is_empty() {
        return Err(Error::EmptyResults);
    }
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    if !report.results.is_empty() {
        let path = dir.join(TABLE_FILE);
        write_results_csv(&report.results, create(&path)?)?;
        written.push(path);
        let path = dir.join(RATIO_FILE);
        write_ratio_csv(&report.results, create(&path)?)?;
        written.push(path);
    }
    if !report.audits.is_empty() {
        let path = dir.join(TLB_FILE);
        let mut out = create(&path)?;
        for (i, audit) in report.audits.iter().enumerate() {
            let mut buf = Vec::new();
            audit.write_summary_csv(&mut buf)?;
            let text = String::from_utf8(buf).expect("csv output is utf-8");
            // one header for the concatenated summaries
            let body = if i == 0 {
                text.as_str()
            } else {
                text.split_once('\n').map_or("", |(_, rest)| rest)
            };
            out.write_all(body.as_bytes())
                .map_err(|e| Error::io(&path, e))?;
        }
        out.flush().map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    if !report.runtimes.is_empty() {
        let path = dir.join(RUNTIME_FILE);
        write_runtime_csv(&report.runtimes, create(&path)?)?;
        written.push(path);
    }
    Ok(written)
}
