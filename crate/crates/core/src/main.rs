use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use restricted_filiform::cli::{
    cmd_cohomology, cmd_extensions, cmd_iso, cmd_verify, parse_field_ext, parse_lambda, render_latex, render_text, InputError,
    LambdaSpec, Report, RunConfig,
};

#[derive(Parser)]
#[command(name = "m2lambda", version, about = "Cohomology and central extensions of the restricted filiform Lie algebras m2^lambda(p)")]
struct Cli {
    /// Characteristic p (prime, at least 5).
    #[arg(long, short = 'p', global = true, default_value_t = 5)]
    prime: u64,
    /// `zero`, `random:SEED` or p comma-separated field elements.
    #[arg(long, global = true, default_value = "zero")]
    lambda: String,
    /// Work over GF(p^2) = GF(p)[t]/(t^2 + c1 t + c0), given as "c0,c1".
    #[arg(long, global = true)]
    field_ext: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 13)]
    max_prime: u64,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, hide = true)]
    tamper: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the restricted Lie algebra axioms and the differential cross-checks.
    Verify,
    /// Compute H^1, H^1_*, H^2 and H^2_* with representatives.
    Cohomology,
    /// Build the one-dimensional central extensions from the cohomology basis.
    Extensions,
    /// Decide whether m2^L and m2^L' are isomorphic.
    Iso { lambda: String, lambda_prime: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn config(cli: &Cli, lambda: &str) -> Result<RunConfig, InputError> {
    let ext = cli.field_ext.as_deref().map(parse_field_ext).transpose()?;
    let mut cfg = RunConfig::new(cli.prime, &LambdaSpec::parse(lambda)?, ext, cli.max_prime, cli.seed)?;
    cfg.tamper = cli.tamper;
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<Option<Report>> {
    let lambda = match &cli.command {
        Command::Iso { lambda, .. } => lambda.as_str(),
        _ => cli.lambda.as_str(),
    };
    let cfg = match config(cli, lambda) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(None);
        }
    };
    let report = match &cli.command {
        Command::Verify => cmd_verify(&cfg)?,
        Command::Cohomology => cmd_cohomology(&cfg).context("computing cohomology")?,
        Command::Extensions => cmd_extensions(&cfg).context("building extensions")?,
        Command::Iso { lambda_prime, .. } => match parse_lambda(cfg.field, lambda_prime) {
            Ok(l) => cmd_iso(&cfg, &l),
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(None);
            }
        },
    };
    Ok(Some(report))
}

fn main() -> Result<ExitCode> {
    let cli = Cli::parse();
    let Some(report) = run(&cli)? else {
        return Ok(ExitCode::from(EXIT_INPUT));
    };
    let out = match cli.format {
        Format::Text => render_text(&report),
        Format::Json => report.to_json() + "\n",
        Format::Latex => render_latex(&report),
    };
    print!("{out}");
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(EXIT_MISMATCH) })
}
