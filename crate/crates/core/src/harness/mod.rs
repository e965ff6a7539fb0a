//! Profile file I/O, algorithm comparison runs, family sweeps, and report
//! emission.

mod format;
mod report;
mod run;

pub use format::{parse_profile, serialize_profile};
pub use report::{
    emit_report, parse_reports_json, AlgorithmRecord, InstanceDescriptor, RatioValue, ReportFormat,
    RunReport, CSV_COLUMNS,
};
pub use run::{parameter_range, parse_algorithms, run_compare, run_family, sweep_family, Algorithm};
