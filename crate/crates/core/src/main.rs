use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand};

use mi_core::cli::{
    canonical_json, cmd_solve, cmd_verify, generate_instance, parse_instance, run_bench, write_bench_csv, BenchConfig,
    CliError, Family, InstanceFile, SolveFlags,
};

/// Matroid intersection with oracle-call accounting.
#[derive(Parser)]
#[command(name = "mi", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print its report.
    Solve {
        file: PathBuf,
        /// Check every BFS against the fully built exchange graph.
        #[arg(long)]
        baseline: bool,
        /// Check path lengths against the shortest-path bounds.
        #[arg(long)]
        check_bounds: bool,
        /// Reject oracles that violate the matroid axioms (n <= 12).
        #[arg(long)]
        axiom_check: bool,
        /// Fail if total calls exceed C * n (r + 1) log2(r + 2)^2.
        #[arg(long, value_name = "C")]
        budget: Option<f64>,
        /// Also write the report to this file.
        #[arg(long, value_name = "OUT")]
        stats: Option<PathBuf>,
    },
    /// Compare the solver against exhaustive search (n <= 20).
    Verify {
        file: PathBuf,
        #[arg(long)]
        axiom_check: bool,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark matrix and emit CSV.
    Bench {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<InstanceFile, CliError> {
    parse_instance(&read(path)?)
}

fn run(args: Args) -> Result<i32, CliError> {
    match args.command {
        Command::Solve {
            file,
            baseline,
            check_bounds,
            axiom_check,
            budget,
            stats,
        } => {
            let instance = load_instance(&file)?;
            let flags = SolveFlags {
                baseline,
                check_bounds,
                axiom_check,
                budget_constant: budget,
            };
            let report = cmd_solve(&instance, flags)?;
            let json = canonical_json(&report);
            print!("{json}");
            if let Some(out) = stats {
                write(&out, json.as_bytes())?;
            }
            if report.passed() {
                Ok(0)
            } else {
                eprintln!("failed checks: {}", report.failures.join(", "));
                Ok(1)
            }
        }
        Command::Verify { file, axiom_check } => {
            let outcome = cmd_verify(&load_instance(&file)?, axiom_check)?;
            println!(
                "solver: {}, brute force: {}, certificate: {}",
                outcome.solver_size, outcome.brute_force_size, outcome.certificate_sum
            );
            Ok(if outcome.ok() { 0 } else { 1 })
        }
        Command::Gen { family, n, seed, out } => {
            let family: Family = family.parse()?;
            let json = generate_instance(family, n, seed).to_canonical_json();
            match out {
                Some(path) => write(&path, json.as_bytes())?,
                None => print!("{json}"),
            }
            Ok(0)
        }
        Command::Bench { config, out } => {
            let config = BenchConfig::parse(&read(&config)?)?;
            let rows = run_bench(&config)?;
            let mut buf = Vec::new();
            write_bench_csv(&rows, &mut buf)?;
            match out {
                Some(path) => write(&path, &buf)?,
                None => io::stdout()
                    .write_all(&buf)
                    .map_err(|e| CliError::Input(format!("stdout: {e}")))?,
            }
            Ok(0)
        }
    }
}

fn main() {
    let args = Args::parse();
    let code = match run(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    };
    process::exit(code);
}
