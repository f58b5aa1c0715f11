//! `voa` — exact reports for the boundary-level vacuum module of type `A_l`.
//!
//! Every subcommand prints a deterministic report (JSON by default,
//! Markdown with `--format md`) and exits with `0` when all checks pass,
//! `1` when a mathematical check fails or a computation errors, and `2` on
//! bad arguments.  Timing is printed to stderr only, so identical inputs
//! produce byte-identical reports.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use report::Report;

const MAX_PLAIN_L: usize = 12;
const MAX_PLAIN_CUTOFF: i64 = 50;

#[derive(Parser)]
#[command(
    name = "voa",
    version,
    about = "Exact symbolic checks for the type-A vacuum module at level -(l+1)/2",
    disable_help_subcommand = true
)]
struct Cli {
    /// Rank of the finite root system (even, >= 2)
    #[arg(long, global = true, default_value_t = 2)]
    l: usize,

    /// Report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Lift the guardrails on `--l` and the delta-layer cutoffs
    #[arg(long, global = true)]
    unsafe_large: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Build the degree-2 singular vector and verify it is annihilated
    VerifySingular,
    /// Map the singular vector to the enveloping algebra and compare with its closed form
    Zhu,
    /// Derive the zero-weight polynomials and the adjoint closure of the image
    Polynomials,
    /// Classify all common zeros of the zero-weight polynomials
    Classify,
    /// Verify admissibility of every classified highest weight
    Admissible {
        /// Scan positive real roots up to this delta layer
        #[arg(long, default_value_t = 50)]
        max_m: i64,
        /// Delta-layer cutoff for the minimal-system computation
        #[arg(long, default_value_t = 10)]
        pi_max_m: i64,
    },
    /// Run every stage in order
    All {
        /// Scan positive real roots up to this delta layer
        #[arg(long, default_value_t = 50)]
        max_m: i64,
        /// Delta-layer cutoff for the minimal-system computation
        #[arg(long, default_value_t = 10)]
        pi_max_m: i64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::VerifySingular => "verify-singular",
            Command::Zhu => "zhu",
            Command::Polynomials => "polynomials",
            Command::Classify => "classify",
            Command::Admissible { .. } => "admissible",
            Command::All { .. } => "all",
        }
    }
}

fn validate(cli: &Cli) -> Result<(), String> {
    if voa_core::check_rank(cli.l).is_err() {
        return Err(format!(
            "--l {} is not supported: the rank must be even and at least 2",
            cli.l
        ));
    }
    if cli.l > MAX_PLAIN_L && !cli.unsafe_large {
        return Err(format!(
            "--l {} exceeds the guardrail of {MAX_PLAIN_L}; pass --unsafe-large to proceed",
            cli.l
        ));
    }
    let cutoffs = match cli.command {
        Command::Admissible { max_m, pi_max_m } | Command::All { max_m, pi_max_m } => {
            Some((max_m, pi_max_m))
        }
        _ => None,
    };
    if let Some((max_m, pi_max_m)) = cutoffs {
        for (flag, value) in [("--max-m", max_m), ("--pi-max-m", pi_max_m)] {
            if value < 0 {
                return Err(format!("{flag} must be nonnegative, got {value}"));
            }
            if value > MAX_PLAIN_CUTOFF && !cli.unsafe_large {
                return Err(format!(
                    "{flag} {value} exceeds the guardrail of {MAX_PLAIN_CUTOFF}; pass --unsafe-large to proceed"
                ));
            }
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(bool, serde_json::Value), voa_core::Error> {
    let l = cli.l;
    match cli.command {
        Command::VerifySingular => commands::verify_singular(l),
        Command::Zhu => commands::zhu(l),
        Command::Polynomials => commands::polynomials(l),
        Command::Classify => commands::classify(l),
        Command::Admissible { max_m, pi_max_m } => commands::admissible(l, max_m, pi_max_m),
        Command::All { max_m, pi_max_m } => commands::all(l, max_m, pi_max_m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = validate(&cli) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }

    let start = Instant::now();
    let outcome = run(&cli);
    let elapsed_ms = start.elapsed().as_millis();

    let (status, pass, payload) = match outcome {
        Ok((true, payload)) => ("pass", true, payload),
        Ok((false, payload)) => ("fail", false, payload),
        Err(e) => (
            "error",
            false,
            serde_json::json!({ "error": format!("{e}") }),
        ),
    };

    let report = Report {
        command: cli.command.name(),
        l: cli.l,
        status,
        payload,
    };
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    };

    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        let mut stdout = std::io::stdout().lock();
        if stdout.write_all(text.as_bytes()).is_err() {
            return ExitCode::from(1);
        }
    }
    eprintln!(
        "voa {} --l {}: {} in {} ms",
        report.command, cli.l, status, elapsed_ms
    );
    ExitCode::from(if pass { 0 } else { 1 })
}
