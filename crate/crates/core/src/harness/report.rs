use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Columns of the CSV report, in order.
pub const CSV_COLUMNS: [&str; 10] = [
    "family",
    "parameter",
    "algorithm",
    "delta",
    "cost",
    "opt_cost",
    "ratio_num",
    "ratio_den",
    "ratio_decimal",
    "is_lower_bound",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    /// `triangle`, `mc123`, `mc4`, or `input` for a user-supplied profile.
    pub family: String,
    pub parameter: Option<u64>,
    pub n: usize,
    pub m: u64,
    /// Closed-form predictions for generated instances.
    #[serde(default)]
    pub predicted: BTreeMap<String, u64>,
}

/// Reduced fraction `num / den` with a six-place decimal rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioValue {
    pub num: u64,
    pub den: u64,
    pub decimal: String,
}

impl RatioValue {
    /// `cost / opt`; `None` when `opt = 0 < cost`. A zero-cost algorithm
    /// against a zero optimum has ratio 1.
    pub fn of(cost: u64, opt: u64) -> Option<Self> {
        let r = match (cost, opt) {
            (0, 0) => Ratio::from_integer(1),
            (_, 0) => return None,
            _ => Ratio::new(cost, opt),
        };
        Some(Self {
            num: *r.numer(),
            den: *r.denom(),
            decimal: format!("{:.6}", *r.numer() as f64 / *r.denom() as f64),
        })
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmRecord {
    pub algorithm: String,
    pub delta: Option<f64>,
    /// Output ranking, highest element first.
    pub permutation: Vec<usize>,
    pub cost: u64,
    pub ratio: Option<RatioValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: InstanceDescriptor,
    pub records: Vec<AlgorithmRecord>,
    pub opt_cost: Option<u64>,
    /// When set, `opt_cost` is only an upper bound on the optimum and every
    /// ratio is a lower bound on the true approximation ratio.
    pub opt_is_upper_bound: bool,
}

impl RunReport {
    pub fn record(&self, algorithm: &str) -> Option<&AlgorithmRecord> {
        self.records.iter().find(|r| r.algorithm == algorithm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::InvalidInput(format!("unknown report format '{other}'"))),
        }
    }
}

pub fn emit_report(reports: &[RunReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Csv => emit_csv(reports),
    }
}

fn emit_csv(reports: &[RunReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    let opt_str = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for report in reports {
        for rec in &report.records {
            let (num, den, dec) = match &rec.ratio {
                Some(r) => (r.num.to_string(), r.den.to_string(), r.decimal.clone()),
                None => Default::default(),
            };
            w.write_record([
                report.instance.family.clone(),
                opt_str(report.instance.parameter),
                rec.algorithm.clone(),
                rec.delta.map(|d| d.to_string()).unwrap_or_default(),
                rec.cost.to_string(),
                opt_str(report.opt_cost),
                num,
                den,
                dec,
                report.opt_is_upper_bound.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("csv output is utf-8")
}

/// Reads back a JSON report list produced by [`emit_report`].
pub fn parse_reports_json(text: &str) -> Result<Vec<RunReport>> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("bad report json: {e}")))
}
