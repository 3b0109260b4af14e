//! `fano3 list` and `fano3 verify`.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{self, Cost, RunConfig, DEFAULT_PRIME, DEFAULT_SECOND_PRIME, DEFAULT_TRIALS};
use crate::report::{emit_report, exit_code, ReportFormat};

pub const SEED_ENV: &str = "FANO3_SEED";

#[derive(Debug, Parser)]
#[command(name = "fano3", version, about = "Re-derive the checked claims and report on them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the claim registry.
    List,
    /// Run claims and print a report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Claim id to run; repeat to select several. Default: all.
    #[arg(long = "claim", value_name = "ID")]
    claims: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = DEFAULT_SECOND_PRIME)]
    second_prime: u64,
    /// Base seed; overrides FANO3_SEED.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long)]
    include_slow: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Record wall-clock time per claim (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
}

/// Runs the command line `args` (program name first). `env_seed` is the
/// value of `FANO3_SEED`, if set. Returns the process exit code.
pub fn run<I, S>(args: I, env_seed: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match cli.command {
        Command::List => {
            let _ = write!(out, "{}", list_table());
            0
        }
        Command::Verify(v) => verify(v, env_seed, out, err),
    }
}

fn verify(v: VerifyArgs, env_seed: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let seed = match (v.seed, env_seed) {
        (Some(s), _) => s,
        (None, Some(e)) => match e.trim().parse::<u64>() {
            Ok(s) => s,
            Err(_) => {
                let _ = writeln!(err, "error: {SEED_ENV}={e:?} is not an integer");
                return 2;
            }
        },
        (None, None) => 0,
    };
    let config = RunConfig {
        prime: v.prime,
        second_prime: v.second_prime,
        seed,
        trials: v.trials,
        include_slow: v.include_slow,
        claims: v.claims,
        format: v.format,
        timings: v.timings,
    };
    match catalog::run_all(&config) {
        Ok(results) => {
            let _ = write!(out, "{}", emit_report(&results, config.format));
            exit_code(&results)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Tab-separated `id, cost, expected, description, paper_ref`.
pub fn list_table() -> String {
    let mut s = String::from("id\tcost\texpected\tdescription\tpaper_ref\n");
    for c in catalog::registry() {
        let cost = match c.cost {
            Cost::Fast => "fast",
            Cost::Slow => "slow",
        };
        s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", c.id, cost, c.expected, c.description, c.paper_ref));
    }
    s
}
