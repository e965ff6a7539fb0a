//! Parameter sweep over a lower-bound family, emitted as CSV and JSON.

use std::error::Error;

use rankagg::adversarial::Family;
use rankagg::harness::{emit_report, parameter_range, sweep_family, Algorithm, ReportFormat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let algorithms = [Algorithm::Mc1, Algorithm::Mc2, Algorithm::Mc3, Algorithm::Copeland, Algorithm::Exact];
    let reports = sweep_family(Family::Mc123, &parameter_range(2, 20, 6)?, &algorithms, 0.0)?;
    print!("{}", emit_report(&reports, ReportFormat::Csv));

    let reports = sweep_family(Family::Mc4, &[12], &[Algorithm::Mc4, Algorithm::Mc4Delta], 0.5)?;
    print!("{}", emit_report(&reports, ReportFormat::Json));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
