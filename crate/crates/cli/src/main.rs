use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use skeincoulomb::fusion::{gamma_loop_eval, jones_wenzl};
use skeincoulomb::text::{eval, Context};
use skeincoulomb::verify::{run_suite, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "skeincoulomb", version, about = "Exact checks for skein algebras and Coulomb branches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites and write a JSON report.
    Verify {
        /// Surface sizes to test, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        n: Vec<usize>,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = -2, allow_hyphen_values = true)]
        m_min: i64,
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        m_max: i64,
        #[arg(long, default_value_t = 6)]
        max_color: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Report path. The report goes to stdout when omitted.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Include per-check wall-clock times in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate an expression and print its canonical form.
    Eval {
        #[arg(long)]
        algebra: Context,
        #[arg(long)]
        n: usize,
        expr: String,
    },
    /// Temperley-Lieb and fusion computations.
    Fusion {
        #[command(subcommand)]
        command: FusionCommand,
    },
}

#[derive(Subcommand)]
enum FusionCommand {
    /// Print the Jones-Wenzl idempotent on `c` strands.
    Jw {
        #[arg(long)]
        c: usize,
    },
    /// Print the loop around a strand of symbolic color.
    GammaLoop,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify { n, suite, m_min, m_max, max_color, seed, json, timings } => {
            let cfg = SuiteConfig { ns: n, suite, m_min, m_max, max_color, seed, timings };
            let report = match run_suite(&cfg) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let text = report.to_json();
            match json {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            for c in report.checks.iter().filter(|c| !c.pass) {
                eprintln!("FAIL {}: {}", c.id, c.counterexample.as_deref().unwrap_or(""));
            }
            eprintln!(
                "{} checks, {} passed, {} failed",
                report.summary.total, report.summary.passed, report.summary.failed
            );
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Eval { algebra, n, expr } => match eval(&expr, algebra, n) {
            Ok(s) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Command::Fusion { command } => {
            match command {
                FusionCommand::Jw { c } => println!("{}", jones_wenzl(c)),
                FusionCommand::GammaLoop => println!("{}", gamma_loop_eval()),
            }
            ExitCode::SUCCESS
        }
    }
}
