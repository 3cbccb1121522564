use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use semireal_cli::{render_json, render_text, run_text, verify_text, CliError, RunOptions, DEFAULT_BOUND, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "semireal", version, about = "Reality and rationality certificates for semidirect products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify every element of a scenario and print the report.
    Run(RunArgs),
    /// Re-check every certificate of a report; exit 0 iff all hold.
    Verify { report: PathBuf },
}

#[derive(Args)]
struct RunArgs {
    scenario: PathBuf,
    #[arg(long, env = "SEMIREAL_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Iteration bound for order detection.
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: u64,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    /// Print only the verification summary.
    #[arg(long)]
    verify_only: bool,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn run(args: RunArgs) -> Result<(), CliError> {
    let text = read(&args.scenario)?;
    let opts = RunOptions {
        seed: args.seed,
        bound: args.bound,
    };
    let start = Instant::now();
    let (report, check) = run_text(&text, &opts)?;
    eprintln!(
        "semireal: {} entries, {} certificates in {:.1} ms",
        report.entries.len(),
        report.certificate_count(),
        start.elapsed().as_secs_f64() * 1e3
    );
    if args.verify_only {
        let summary = check?;
        println!("verified {} certificates over {} entries", summary.certificates, summary.entries);
        return Ok(());
    }
    if args.text {
        print!("{}", render_text(&report));
    } else {
        print!("{}", render_json(&report));
    }
    check.map(|_| ())
}

fn verify(path: PathBuf) -> Result<(), CliError> {
    let summary = verify_text(&read(&path)?)?;
    println!("ok: {} certificates over {} entries", summary.certificates, summary.entries);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Verify { report } => verify(report),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("semireal: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
