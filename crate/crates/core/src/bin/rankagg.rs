use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rankagg::adversarial::Family;
use rankagg::exact::{kemeny_optimal, Objective};
use rankagg::harness::{
    emit_report, parameter_range, parse_algorithms, parse_profile, run_compare, serialize_profile,
    sweep_family, Algorithm, ReportFormat,
};
use rankagg::ranking::profile_cost;
use rankagg::{Error, Profile, Result};

#[derive(Parser)]
#[command(name = "rankagg", version, about = "Rank aggregation algorithms and lower-bound families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Aggregate a profile with one algorithm.
    Aggregate {
        #[arg(long)]
        algo: String,
        /// Restart probability for mc4delta.
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long)]
        input: PathBuf,
    },
    /// Solve a profile exactly (n <= 20).
    Exact {
        #[arg(long)]
        input: PathBuf,
        /// kemeny (total Kendall distance) or tournament (majority back arcs).
        #[arg(long, default_value = "kemeny")]
        objective: String,
    },
    /// Run several algorithms on one profile and emit a report.
    Compare {
        #[arg(long)]
        algos: String,
        #[arg(long)]
        input: PathBuf,
        /// Also compute the exact optimum and approximation ratios.
        #[arg(long)]
        opt: bool,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Print (or write) one lower-bound instance in PROFILE format.
    Adversarial {
        #[arg(long)]
        family: String,
        #[arg(long)]
        param: u64,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Run algorithms over a range of family parameters.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = 1)]
        step: u64,
        #[arg(long)]
        algos: String,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, default_value = "csv")]
        format: String,
    },
}

fn read_profile(path: &Path) -> Result<Profile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_profile(&text)
}

fn resolve_delta(algorithms: &[Algorithm], delta: Option<f64>) -> Result<f64> {
    match delta {
        Some(d) => Ok(d),
        None if algorithms.contains(&Algorithm::Mc4Delta) => {
            Err(Error::InvalidInput("mc4delta requires --delta".into()))
        }
        None => Ok(0.0),
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Aggregate { algo, delta, input } => {
            let alg: Algorithm = algo.parse()?;
            let delta = resolve_delta(&[alg], delta)?;
            let profile = read_profile(&input)?;
            let ranking = alg.run(&profile, delta)?;
            println!("ranking: {ranking}");
            println!("cost: {}", profile_cost(&ranking, &profile)?);
        }
        Command::Exact { input, objective } => {
            let objective = match objective.as_str() {
                "kemeny" => Objective::Kemeny,
                "tournament" => Objective::Tournament,
                other => return Err(Error::InvalidInput(format!("unknown objective '{other}'"))),
            };
            let profile = read_profile(&input)?;
            let opt = kemeny_optimal(&profile, objective)?;
            println!("ranking: {}", opt.permutation);
            println!("cost: {}", opt.cost);
        }
        Command::Compare { algos, input, opt, delta, format } => {
            let algorithms = parse_algorithms(&algos)?;
            let delta = resolve_delta(&algorithms, delta)?;
            let format: ReportFormat = format.parse()?;
            let profile = read_profile(&input)?;
            let report = run_compare(&profile, &algorithms, delta, opt)?;
            print!("{}", emit_report(&[report], format));
        }
        Command::Adversarial { family, param, emit } => {
            let family: Family = family.parse()?;
            let inst = family.instance(param)?;
            let mut text = format!("# family {} parameter {}\n", family, param);
            for (key, value) in &inst.predicted {
                text.push_str(&format!("# predicted {key} = {value}\n"));
            }
            text.push_str(&serialize_profile(&inst.profile));
            match emit {
                Some(path) => fs::write(&path, &text)
                    .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Sweep { family, from, to, step, algos, delta, format } => {
            let family: Family = family.parse()?;
            let algorithms = parse_algorithms(&algos)?;
            let delta = resolve_delta(&algorithms, delta)?;
            let format: ReportFormat = format.parse()?;
            let params = parameter_range(from, to, step)?;
            let reports = sweep_family(family, &params, &algorithms, delta)?;
            print!("{}", emit_report(&reports, format));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Budget { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
