mod job;
mod report;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use skewcoh::Execution;

use job::{deformation_params, resolve_max_order, JobError, JobSpec};
use report::{cohomology_report, deform_report, render_text, Report, Sections};

#[derive(Parser, Debug)]
#[command(name = "skewcoh", version, about = "Graded deformation cohomology of S(V) ⋊ G for cyclic G")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Parallel,
    Sequential,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Job file: {"field": ..., "generator": [[...]]}
    job: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Also run the coprime / split-characteristic consistency checks.
    #[arg(long)]
    nonmodular_check: bool,
    /// Refuse groups larger than this (default: $SKEWCOH_MAX_ORDER, then 10000).
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Parallel)]
    mode: Mode,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form dimensions only.
    Analyze(Common),
    /// Closed form against the cochain oracle.
    Compare(Common),
    /// Distinguished representatives for every element.
    Reps(Common),
    /// Square bracket, PBW confluence and Hilbert counts for a two-dimensional deformation.
    Deform {
        #[command(flatten)]
        common: Common,
        /// Use the transvection group over F_p instead of the job's group.
        #[arg(long)]
        deform_prime: Option<u64>,
    },
}

fn run(cli: &Cli) -> Result<Report> {
    let common = match &cli.command {
        Command::Analyze(c) | Command::Compare(c) | Command::Reps(c) => c,
        Command::Deform { common, .. } => common,
    };
    let exec = match common.mode {
        Mode::Parallel => Execution::Parallel,
        Mode::Sequential => Execution::Sequential,
    };
    let max_order = resolve_max_order(common.max_order, std::env::var("SKEWCOH_MAX_ORDER").ok())?;
    let job = JobSpec::load(&common.job)?;
    let mut sections = Sections {
        nonmodular: common.nonmodular_check,
        ..Sections::default()
    };
    match &cli.command {
        Command::Deform { deform_prime, .. } => {
            let params = deformation_params(&job, *deform_prime, max_order)?;
            deform_report(&params, exec)
        }
        cmd => {
            let gr = job.group(max_order)?;
            let name = match cmd {
                Command::Analyze(_) => "analyze",
                Command::Compare(_) => {
                    sections.oracle = true;
                    "compare"
                }
                _ => {
                    sections.representatives = true;
                    "reps"
                }
            };
            cohomology_report(name, &gr, sections, exec)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = match &cli.command {
        Command::Analyze(c) | Command::Compare(c) | Command::Reps(c) => c.json,
        Command::Deform { common, .. } => common.json,
    };
    match run(&cli) {
        Ok(report) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", render_text(&report));
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<JobError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
