//! Verification rows and the report document, with CSV and JSON forms.

use std::io::{Read, Write};

use catalan_core::{ExactInteger, ReprResult64};
use serde::{Deserialize, Serialize};

pub const CSV_HEADER: &str = "n,repr,exact,log_estimate,abs_log_error,n_evals,converged";

/// One representation evaluated at one index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRow {
    pub n: u32,
    pub repr: String,
    /// Decimal digits of the exact Catalan number.
    pub exact: String,
    pub log_estimate: f64,
    pub abs_log_error: f64,
    pub n_evals: usize,
    pub converged: bool,
}

impl VerificationRow {
    pub fn from_result(repr: &str, exact: &ExactInteger, r: &ReprResult64) -> Self {
        Self {
            n: r.n.get(),
            repr: repr.to_owned(),
            exact: exact.to_string(),
            log_estimate: r.log_value,
            abs_log_error: r.abs_log_error,
            n_evals: r.integral.n_evals,
            converged: r.integral.converged,
        }
    }

    pub fn exact_value(&self) -> Option<ExactInteger> {
        self.exact.parse().ok()
    }

    pub fn passes(&self, bound: f64) -> bool {
        self.converged && self.abs_log_error <= bound
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool_version: String,
    pub tolerance: f64,
    /// UTC, ISO-8601.
    pub timestamp: String,
}

impl Metadata {
    pub fn now(tolerance: f64) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            tolerance,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub metadata: Metadata,
    pub rows: Vec<VerificationRow>,
}

impl ReportDocument {
    /// Builds a document with rows ordered by `n`, then by tag.
    pub fn new(metadata: Metadata, mut rows: Vec<VerificationRow>) -> Self {
        rows.sort_by(|a, b| (a.n, &a.repr).cmp(&(b.n, &b.repr)));
        Self { metadata, rows }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// The CSV form carries the rows only.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        write_rows_csv(&self.rows, out)
    }
}

pub fn write_rows_csv<W: Write>(rows: &[VerificationRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    if rows.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows_csv<R: Read>(input: R) -> csv::Result<Vec<VerificationRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}
